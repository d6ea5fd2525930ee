//! Subtraction-free rational functions.
//!
//! A [`SymRat`] is a quotient of two polynomials with nonnegative integer
//! coefficients over a declared, ordered variable set. Equality is decided by
//! cross-multiplication, so it never depends on how far a quotient has been
//! reduced. After every operation common factors are removed when a verified
//! common divisor can be found (monomial part, integer content, heuristic
//! polynomial gcd); this only bounds expression growth.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::poly::{Poly, PolyDisplay};
use super::{Model, Semifield, SemifieldError};

/// Ordered list of variable names shared by a family of symbolic values.
#[derive(Clone, Debug)]
pub struct Vars(Arc<Vec<String>>);

impl Vars {
    pub fn new<S: AsRef<str>>(names: impl IntoIterator<Item = S>) -> Self {
        Vars(Arc::new(
            names.into_iter().map(|s| s.as_ref().to_string()).collect(),
        ))
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    /// Each variable as a symbolic value, in declaration order.
    pub fn generators(&self) -> Vec<SymRat> {
        (0..self.len())
            .map(|i| SymRat {
                vars: self.clone(),
                num: Poly::var(self.len(), i),
                den: Poly::one(self.len()),
            })
            .collect()
    }
}

impl PartialEq for Vars {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Vars {}

#[derive(Clone, Debug)]
pub struct SymRat {
    vars: Vars,
    num: Poly,
    den: Poly,
}

impl SymRat {
    pub fn var(vars: &Vars, name: &str) -> Result<Self, SemifieldError> {
        let i = vars.index_of(name).ok_or_else(|| SemifieldError::Parse {
            model: Model::Sym,
            text: name.to_string(),
            reason: "undeclared variable".to_string(),
        })?;
        Ok(SymRat {
            vars: vars.clone(),
            num: Poly::var(vars.len(), i),
            den: Poly::one(vars.len()),
        })
    }

    pub fn constant(vars: &Vars, k: u64) -> Result<Self, SemifieldError> {
        if k == 0 {
            return Err(SemifieldError::NotPositive("0".to_string()));
        }
        Ok(SymRat {
            vars: vars.clone(),
            num: Poly::constant(vars.len(), k),
            den: Poly::one(vars.len()),
        })
    }

    /// Builds `num / den`, rejecting negative coefficients and zero parts.
    pub fn from_polys(vars: &Vars, num: Poly, den: Poly) -> Result<Self, SemifieldError> {
        if num.nvars() != vars.len() || den.nvars() != vars.len() {
            return Err(SemifieldError::VariableMismatch);
        }
        if den.is_zero() {
            return Err(SemifieldError::DivisionByZero);
        }
        if num.is_zero() || !num.all_nonnegative() || !den.all_nonnegative() {
            return Err(SemifieldError::NotPositive(format!(
                "{} / {}",
                PolyDisplay {
                    poly: &num,
                    names: vars.names()
                },
                PolyDisplay {
                    poly: &den,
                    names: vars.names()
                }
            )));
        }
        Ok(SymRat::reduced(vars.clone(), num, den))
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    /// `num(a)·den(b) == num(b)·den(a)`.
    pub fn sym_equal(&self, other: &Self) -> Result<bool, SemifieldError> {
        self.check_vars(other)?;
        Ok(self.num.mul(&other.den) == other.num.mul(&self.den))
    }

    /// Substitutes a value from any semifield for each variable.
    ///
    /// Works for every model because both polynomials are subtraction-free:
    /// a coefficient `k` becomes an n-fold sum. With tropical values this is
    /// the tropicalization of the rational function.
    pub fn evaluate<K: Semifield>(&self, point: &[K]) -> Result<K, SemifieldError> {
        if point.len() != self.vars.len() || point.is_empty() {
            return Err(SemifieldError::VariableMismatch);
        }
        let one = point[0].one_like();
        let n = eval_poly(&self.num, point, &one)?;
        let d = eval_poly(&self.den, point, &one)?;
        n.div(&d)
    }

    fn check_vars(&self, other: &Self) -> Result<(), SemifieldError> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(SemifieldError::VariableMismatch)
        }
    }

    fn reduced(vars: Vars, num: Poly, den: Poly) -> Self {
        let (num, den) = reduce(num, den);
        SymRat { vars, num, den }
    }
}

fn eval_poly<K: Semifield>(p: &Poly, point: &[K], one: &K) -> Result<K, SemifieldError> {
    let mut acc: Option<K> = None;
    for (e, c) in p.terms() {
        let mut term = one.clone();
        for (x, &k) in point.iter().zip(e) {
            if k > 0 {
                term = term.mul(&x.pow(k)?)?;
            }
        }
        let k = c.to_u64().ok_or(SemifieldError::Overflow)?;
        let term = term.nfold_sum(k)?;
        acc = Some(match acc {
            None => term,
            Some(a) => a.add(&term)?,
        });
    }
    acc.ok_or_else(|| SemifieldError::NotPositive("0".to_string()))
}

/// Cancels common factors while keeping both parts subtraction-free.
fn reduce(num: Poly, den: Poly) -> (Poly, Poly) {
    let nm = num.monomial_gcd();
    let dm = den.monomial_gcd();
    let common: Vec<u32> = nm.iter().zip(&dm).map(|(a, b)| (*a).min(*b)).collect();
    let (mut num, mut den) = if common.iter().any(|&k| k > 0) {
        (num.div_monomial(&common), den.div_monomial(&common))
    } else {
        (num, den)
    };

    if !num.is_constant() && !den.is_constant() && !den.is_monomial() && !num.is_monomial() {
        if let Some(g) = num.gcd_heuristic(&den) {
            if !g.is_constant() {
                if let (Some(n2), Some(d2)) = (num.div_exact(&g), den.div_exact(&g)) {
                    if n2.all_nonnegative() && d2.all_nonnegative() {
                        num = n2;
                        den = d2;
                    } else if n2.all_nonpositive() && d2.all_nonpositive() {
                        num = n2.neg();
                        den = d2.neg();
                    }
                }
            }
        }
    }

    let content = num_integer::Integer::gcd(&num.content(), &den.content());
    if !content.is_zero() && content != BigInt::from(1) {
        let inv = |p: &Poly| {
            Poly::from_terms(p.nvars(), p.terms().map(|(e, c)| (e.clone(), c / &content)))
        };
        num = inv(&num);
        den = inv(&den);
    }
    (num, den)
}

impl Semifield for SymRat {
    fn add(&self, rhs: &Self) -> Result<Self, SemifieldError> {
        self.check_vars(rhs)?;
        if self.den == rhs.den {
            return Ok(SymRat::reduced(
                self.vars.clone(),
                self.num.add(&rhs.num),
                self.den.clone(),
            ));
        }
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        Ok(SymRat::reduced(
            self.vars.clone(),
            num,
            self.den.mul(&rhs.den),
        ))
    }

    fn mul(&self, rhs: &Self) -> Result<Self, SemifieldError> {
        self.check_vars(rhs)?;
        Ok(SymRat::reduced(
            self.vars.clone(),
            self.num.mul(&rhs.num),
            self.den.mul(&rhs.den),
        ))
    }

    fn div(&self, rhs: &Self) -> Result<Self, SemifieldError> {
        self.check_vars(rhs)?;
        if rhs.num.is_zero() {
            return Err(SemifieldError::DivisionByZero);
        }
        Ok(SymRat::reduced(
            self.vars.clone(),
            self.num.mul(&rhs.den),
            self.den.mul(&rhs.num),
        ))
    }

    fn one_like(&self) -> Self {
        let n = self.vars.len();
        SymRat {
            vars: self.vars.clone(),
            num: Poly::one(n),
            den: Poly::one(n),
        }
    }

    fn model(&self) -> Model {
        Model::Sym
    }

    fn nfold_sum(&self, k: u64) -> Result<Self, SemifieldError> {
        if k == 0 {
            return Err(SemifieldError::ZeroFoldSum);
        }
        Ok(SymRat::reduced(
            self.vars.clone(),
            self.num.scale(&BigInt::from(k)),
            self.den.clone(),
        ))
    }
}

impl PartialEq for SymRat {
    fn eq(&self, other: &Self) -> bool {
        self.sym_equal(other).unwrap_or(false)
    }
}

impl fmt::Display for SymRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.vars.names();
        let num = PolyDisplay {
            poly: &self.num,
            names,
        };
        let den = PolyDisplay {
            poly: &self.den,
            names,
        };
        if self.den.is_one() {
            return write!(f, "{num}");
        }
        if self.num.len() > 1 {
            write!(f, "({num})")?;
        } else {
            write!(f, "{num}")?;
        }
        let den_is_atom = self.den.len() == 1 && !den.to_string().contains('*');
        if den_is_atom {
            write!(f, " / {den}")
        } else {
            write!(f, " / ({den})")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semifield::PosRat;
    use proptest::prelude::*;

    fn xyz() -> (Vars, SymRat, SymRat, SymRat) {
        let vars = Vars::new(["x", "y", "z"]);
        let g = vars.generators();
        (vars, g[0].clone(), g[1].clone(), g[2].clone())
    }

    #[test]
    fn equality_by_cross_multiplication() {
        let (vars, x, y, _) = xyz();
        assert!(x.add(&y).unwrap().sym_equal(&y.add(&x).unwrap()).unwrap());
        let lhs = x.mul(&y).unwrap().div(&x.add(&x).unwrap()).unwrap();
        let rhs = x.mul(&y).unwrap().div(&x.nfold_sum(2).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        let two = SymRat::constant(&vars, 2).unwrap();
        assert_eq!(lhs, y.div(&two).unwrap());
    }

    #[test]
    fn distinct_polynomials_differ() {
        let vars = Vars::new(["a", "b", "c", "d"]);
        let g = vars.generators();
        let (a, b, c, d) = (&g[0], &g[1], &g[2], &g[3]);
        let p1 = a
            .mul(b)
            .unwrap()
            .add(&a.mul(d).unwrap())
            .unwrap()
            .add(&c.mul(d).unwrap())
            .unwrap();
        let p2 = p1.add(&a.mul(b).unwrap().mul(d).unwrap()).unwrap();
        assert!(!p1.sym_equal(&p2).unwrap());
    }

    #[test]
    fn reduction_cancels_common_factor() {
        let (_, x, y, z) = xyz();
        let s = x.add(&z).unwrap();
        let q = y.mul(&s).unwrap().div(&s).unwrap();
        assert_eq!(q.denominator(), &Poly::one(3));
        assert_eq!(q.to_string(), "y");
    }

    #[test]
    fn variable_sets_must_match() {
        let (_, x, _, _) = xyz();
        let other = Vars::new(["x"]).generators()[0].clone();
        assert_eq!(x.add(&other), Err(SemifieldError::VariableMismatch));
    }

    #[test]
    fn rejects_negative_coefficients() {
        let vars = Vars::new(["x"]);
        let p = Poly::var(1, 0).sub(&Poly::one(1));
        assert!(SymRat::from_polys(&vars, p, Poly::one(1)).is_err());
    }

    #[test]
    fn display_parenthesizes() {
        let (_, x, y, z) = xyz();
        let q = x.add(&y).unwrap().div(&y.mul(&z).unwrap()).unwrap();
        assert_eq!(q.to_string(), "(x + y) / (y*z)");
    }

    fn q(n: u64) -> PosRat {
        PosRat::from_int(n as i64).unwrap()
    }

    proptest! {
        // Substitution commutes with the operations.
        #[test]
        fn evaluation_is_a_homomorphism(px in 1u64..30, py in 1u64..30, pz in 1u64..30) {
            let (_, x, y, z) = xyz();
            let point = [q(px), q(py), q(pz)];
            let s = x.add(&z)?;
            let xp = y.mul(&z)?.div(&s)?;
            let direct = q(py).mul(&q(pz))?.div(&q(px).add(&q(pz))?)?;
            prop_assert_eq!(xp.evaluate(&point)?, direct);
            let prod = xp.mul(&s)?;
            prop_assert_eq!(prod.evaluate(&point)?, xp.evaluate(&point)?.mul(&s.evaluate(&point)?)?);
        }

        #[test]
        fn symbolic_axioms(k in 1u64..5) {
            let (_, x, y, z) = xyz();
            let xk = x.nfold_sum(k)?;
            prop_assert_eq!(xk.add(&y)?.add(&z)?, xk.add(&y.add(&z)?)?);
            prop_assert_eq!(xk.mul(&y.add(&z)?)?, xk.mul(&y)?.add(&xk.mul(&z)?)?);
            prop_assert_eq!(xk.mul(&y)?.div(&y)?, xk);
        }
    }
}
