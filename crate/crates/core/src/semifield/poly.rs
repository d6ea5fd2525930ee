//! Sparse multivariate polynomials over ℤ.
//!
//! Terms are kept in a `BTreeMap` keyed by exponent vectors, so iteration is in
//! lexicographic order and the leading term is the last entry. Zero
//! coefficients are never stored.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Exponent vector of a monomial, one entry per declared variable.
pub type Exponents = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Exponents, BigInt>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        let mut p = Poly::zero(nvars);
        p.add_term(vec![0; nvars], c.into());
        p
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, 1)
    }

    /// The polynomial `x_index`.
    pub fn var(nvars: usize, index: usize) -> Self {
        assert!(index < nvars, "variable index out of range");
        let mut e = vec![0; nvars];
        e[index] = 1;
        let mut p = Poly::zero(nvars);
        p.add_term(e, BigInt::one());
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponents, BigInt)>) -> Self {
        let mut p = Poly::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector has wrong arity");
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(e, c)| c.is_one() && e.iter().all(|&x| x == 0))
    }

    /// True when the polynomial has no non-constant term.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn all_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn all_nonpositive(&self) -> bool {
        self.terms.values().all(|c| !c.is_positive())
    }

    pub fn leading(&self) -> Option<(&Exponents, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    /// Indices of variables that occur with positive exponent.
    pub fn variables(&self) -> Vec<usize> {
        (0..self.nvars).filter(|&v| self.degree_in(v) > 0).collect()
    }

    pub fn add_term(&mut self, e: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        debug_assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        debug_assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        debug_assert_eq!(self.nvars, rhs.nvars);
        let mut out = Poly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, k: &BigInt) -> Poly {
        if k.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut acc = Poly::one(self.nvars);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Divides every coefficient by `k`; the caller guarantees exactness.
    fn div_scalar_exact(&self, k: &BigInt) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    debug_assert!((c % k).is_zero());
                    (e.clone(), c / k)
                })
                .collect(),
        }
    }

    /// Nonnegative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn max_norm(&self) -> BigInt {
        self.terms
            .values()
            .map(|c| c.abs())
            .max()
            .unwrap_or_default()
    }

    /// Componentwise minimum exponent over all terms.
    pub fn monomial_gcd(&self) -> Exponents {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return vec![0; self.nvars];
        };
        let mut g = first.clone();
        for e in it {
            for (gv, ev) in g.iter_mut().zip(e) {
                *gv = (*gv).min(*ev);
            }
        }
        g
    }

    pub fn div_monomial(&self, m: &[u32]) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(m).map(|(x, y)| x - y).collect(), c.clone()))
                .collect(),
        }
    }

    /// Exact division; `None` when `divisor` does not divide `self` in ℤ[x].
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        let (dm, dc) = divisor.leading()?;
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.nvars);
        while let Some((rm, rc)) = rem.leading().map(|(m, c)| (m.clone(), c.clone())) {
            if rm.iter().zip(&dm).any(|(r, d)| r < d) {
                return None;
            }
            let (qc, r) = rc.div_rem(&dc);
            if !r.is_zero() {
                return None;
            }
            let qm: Exponents = rm.iter().zip(&dm).map(|(r, d)| r - d).collect();
            for (e, c) in &divisor.terms {
                let shifted: Exponents = e.iter().zip(&qm).map(|(x, y)| x + y).collect();
                rem.add_term(shifted, -(c * &qc));
            }
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Substitutes the integer `value` for variable `var`.
    pub fn eval_var(&self, var: usize, value: &BigInt) -> Poly {
        let mut powers: Vec<BigInt> = vec![BigInt::one()];
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            let k = e[var] as usize;
            while powers.len() <= k {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            let mut e2 = e.clone();
            e2[var] = 0;
            out.add_term(e2, c * &powers[k]);
        }
        out
    }

    /// Evaluates at an integer point.
    pub fn eval_int(&self, point: &[BigInt]) -> BigInt {
        let mut acc = BigInt::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                t *= num_traits::pow(x.clone(), k as usize);
            }
            acc += t;
        }
        acc
    }

    fn normalize_sign(self) -> Poly {
        match self.leading() {
            Some((_, c)) if c.is_negative() => self.neg(),
            _ => self,
        }
    }

    fn primitive(&self) -> Poly {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            self.clone()
        } else {
            self.div_scalar_exact(&c)
        }
    }

    /// Greatest common divisor by the heuristic evaluation/interpolation
    /// method. Returns `None` when the heuristic gives up; any returned value
    /// is a verified common divisor with positive leading coefficient.
    pub fn gcd_heuristic(&self, other: &Poly) -> Option<Poly> {
        if self.is_zero() {
            return Some(other.clone().normalize_sign());
        }
        if other.is_zero() {
            return Some(self.clone().normalize_sign());
        }
        let mut vars = self.variables();
        for v in other.variables() {
            if !vars.contains(&v) {
                vars.push(v);
            }
        }
        vars.sort_unstable();
        heu_gcd(self, other, &vars).map(Poly::normalize_sign)
    }
}

const HEU_ATTEMPTS: usize = 6;

fn heu_gcd(f: &Poly, g: &Poly, vars: &[usize]) -> Option<Poly> {
    let nvars = f.nvars;
    let cf = f.content();
    let cg = g.content();
    let common = cf.gcd(&cg);
    let Some((&x, rest)) = vars.split_last() else {
        return Some(Poly::constant(nvars, common));
    };
    let f = f.div_scalar_exact(&cf);
    let g = g.div_scalar_exact(&cg);
    if f.is_constant() || g.is_constant() {
        return Some(Poly::constant(nvars, common));
    }

    let two = BigInt::from(2);
    let mut xi = &two * f.max_norm().min(g.max_norm()) + BigInt::from(29);
    for _ in 0..HEU_ATTEMPTS {
        let fe = f.eval_var(x, &xi);
        let ge = g.eval_var(x, &xi);
        if !fe.is_zero() && !ge.is_zero() {
            if let Some(he) = heu_gcd(&fe, &ge, rest) {
                let h = interpolate(&he, x, &xi).primitive().normalize_sign();
                if !h.is_zero() && f.div_exact(&h).is_some() && g.div_exact(&h).is_some() {
                    return Some(h.scale(&common));
                }
            }
        }
        let grow = xi.sqrt().sqrt();
        xi = xi * BigInt::from(73794) * grow / BigInt::from(27011);
    }
    None
}

/// Recovers a polynomial in `var` from its value at `xi` via the symmetric
/// `xi`-adic expansion of every coefficient.
fn interpolate(h: &Poly, var: usize, xi: &BigInt) -> Poly {
    let half = xi / BigInt::from(2);
    let mut out = Poly::zero(h.nvars);
    for (e, c) in &h.terms {
        let mut c = c.clone();
        let mut k = 0u32;
        while !c.is_zero() {
            let mut r = c.mod_floor(xi);
            if r > half {
                r -= xi;
            }
            if !r.is_zero() {
                let mut e2 = e.clone();
                e2[var] = k;
                out.add_term(e2, r.clone());
            }
            c = (c - r) / xi;
            k += 1;
        }
    }
    out
}

/// Formats with the given variable names, leading term first.
pub struct PolyDisplay<'a> {
    pub poly: &'a Poly,
    pub names: &'a [String],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.poly.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if n > 0 {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            } else if neg {
                write!(f, "-")?;
            }
            let mag = c.abs();
            let mut factors: Vec<String> = Vec::new();
            let is_const = e.iter().all(|&x| x == 0);
            if !mag.is_one() || is_const {
                factors.push(mag.to_string());
            }
            for (v, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => factors.push(self.names[v].clone()),
                    _ => factors.push(format!("{}^{}", self.names[v], k)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> Poly {
        Poly::var(n, i)
    }

    fn c(n: usize, k: i64) -> Poly {
        Poly::constant(n, k)
    }

    #[test]
    fn exact_division_roundtrip() {
        let a = x(3, 0).add(&x(3, 1)).add(&c(3, 2));
        let b = x(3, 2).mul(&x(3, 0)).add(&c(3, 1));
        let p = a.mul(&b);
        assert_eq!(p.div_exact(&a), Some(b.clone()));
        assert_eq!(p.div_exact(&b), Some(a));
        assert_eq!(b.div_exact(&x(3, 1)), None);
    }

    #[test]
    fn gcd_finds_common_factor() {
        let n = 4;
        let alpha = x(n, 0)
            .mul(&x(n, 1))
            .add(&x(n, 0).mul(&x(n, 3)))
            .add(&x(n, 2).mul(&x(n, 3)));
        let bd = x(n, 1).add(&x(n, 3));
        let f = alpha.mul(&bd).mul(&x(n, 2));
        let g = alpha.mul(&x(n, 0).add(&x(n, 2))).scale(&BigInt::from(2));
        let h = f.gcd_heuristic(&g).expect("heuristic succeeds");
        assert_eq!(h, alpha);
    }

    #[test]
    fn gcd_of_coprime_is_constant() {
        let f = x(2, 0).add(&c(2, 1));
        let g = x(2, 1).add(&c(2, 1));
        assert!(f.gcd_heuristic(&g).unwrap().is_one());
    }

    #[test]
    fn gcd_with_integer_content() {
        let f = x(1, 0).scale(&BigInt::from(6));
        let g = x(1, 0).pow(2).scale(&BigInt::from(4));
        assert_eq!(
            f.gcd_heuristic(&g).unwrap(),
            x(1, 0).scale(&BigInt::from(2))
        );
    }

    #[test]
    fn display_orders_leading_first() {
        let names: Vec<String> = ["a", "b"].iter().map(|s| s.to_string()).collect();
        let p = x(2, 0)
            .mul(&x(2, 1).pow(2))
            .scale(&BigInt::from(2))
            .add(&c(2, 3));
        assert_eq!(
            PolyDisplay {
                poly: &p,
                names: &names
            }
            .to_string(),
            "2*a*b^2 + 3"
        );
    }
}
