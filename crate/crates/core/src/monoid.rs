//! The monoid on generators `ξ_i^n` acting on normal forms, its crystal
//! operators and Frobenius maps.
//!
//! An element of `M₀⁺` is `ξ_{i₁}^{c₁} … ξ_{i_N}^{c_N}` for a reduced word
//! of `w₀`; it is stored by its tropical coordinates at the base word.
//! Left multiplication by `ξ_i^n` moves to a word starting with `i` and
//! replaces the first coordinate `c₁` by `min(n, c₁)`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::cartan::DiagramAutomorphism;
use crate::chamber::{Chamber, ChamberError, ChamberPoint, DecoratedWord};
use crate::folding::{FoldedChamberPoint, FoldedDecoratedWord, Folding, FoldingError};
use crate::semifield::TropNat;
use crate::weyl::{WeylElement, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoidError {
    #[error(transparent)]
    Chamber(#[from] ChamberError),
    #[error(transparent)]
    Folding(#[from] FoldingError),
    #[error("generator exponent {0} is negative; only n >= 0 acts on normal forms")]
    NegativeExponent(i64),
    #[error("raise_to needs l_{i}(m) = 0, found {found}")]
    NotLowest { i: String, found: u64 },
    #[error("word does not start with the generator's node")]
    WrongFirstLetter,
    #[error("product of σ-fixed elements is not σ-fixed")]
    NotSigmaFixed,
    #[error("string length scan found no fixed exponent up to {0}")]
    ScanExhausted(u64),
}

impl MonoidError {
    pub fn kind(&self) -> &'static str {
        match self {
            MonoidError::Chamber(e) => e.kind(),
            MonoidError::Folding(e) => e.kind(),
            MonoidError::NegativeExponent(_) => "negative_exponent",
            MonoidError::NotLowest { .. } => "not_lowest",
            MonoidError::WrongFirstLetter => "wrong_first_letter",
            MonoidError::NotSigmaFixed => "not_sigma_fixed",
            MonoidError::ScanExhausted(_) => "scan_exhausted",
        }
    }
}

/// `ξ_i^n`. Any integer exponent is a valid generator; only `n >= 0` acts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MonoidGenerator {
    pub i: usize,
    pub n: i64,
}

/// `ζ(c_*)` stored by its coordinates at the base word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonoidElement {
    pub coords: Vec<u64>,
}

#[derive(Serialize)]
struct ElementJson<'a> {
    word: Vec<String>,
    coords: &'a [u64],
}

fn to_trop(v: &[u64]) -> Vec<TropNat> {
    v.iter().map(|&x| TropNat(x)).collect()
}

fn from_trop(v: &[TropNat]) -> Vec<u64> {
    v.iter().map(|x| x.0).collect()
}

/// Monoid operations over a chamber of a simply laced datum.
pub struct Monoid<'c> {
    chamber: &'c Chamber,
    /// `β_k = s_{i₁} … s_{i_{k-1}}(α_{i_k})` along the base word.
    base_roots: Vec<Vec<i64>>,
}

impl<'c> Monoid<'c> {
    pub fn new(chamber: &'c Chamber) -> Self {
        let datum = chamber.datum();
        let mut w = WeylElement::identity(datum.rank());
        let mut base_roots = Vec::new();
        for &i in chamber.base_word().letters() {
            let mut e = vec![0; datum.rank()];
            e[i] = 1;
            base_roots.push(w.apply(&e));
            w = w.right_mul_simple(datum, i);
        }
        Monoid {
            chamber,
            base_roots,
        }
    }

    pub fn chamber(&self) -> &Chamber {
        self.chamber
    }

    pub fn rank(&self) -> usize {
        self.chamber.datum().rank()
    }

    pub fn length(&self) -> usize {
        self.chamber.longest_length()
    }

    pub fn element(&self, coords: Vec<u64>) -> Result<MonoidElement, MonoidError> {
        DecoratedWord::new(self.chamber.base_word().clone(), to_trop(&coords))?;
        Ok(MonoidElement { coords })
    }

    /// `ζ_{i_*}(c_*)` moved to the base word.
    pub fn normal_form(&self, word: &Word, coords: &[u64]) -> Result<MonoidElement, MonoidError> {
        let dw = self.chamber.decorate(word.clone(), to_trop(coords))?;
        Ok(MonoidElement {
            coords: from_trop(&self.chamber.canonical(&dw)?.coords),
        })
    }

    fn point(&self, m: &MonoidElement) -> ChamberPoint<TropNat> {
        ChamberPoint {
            coords: to_trop(&m.coords),
        }
    }

    /// Coordinates of `m` at an arbitrary reduced word.
    pub fn coords_at(&self, m: &MonoidElement, word: &Word) -> Result<Vec<u64>, MonoidError> {
        Ok(from_trop(
            &self.chamber.realize(&self.point(m), word)?.coords,
        ))
    }

    /// `ξ_i^n · m`.
    pub fn left_mul_gen(
        &self,
        g: MonoidGenerator,
        m: &MonoidElement,
    ) -> Result<MonoidElement, MonoidError> {
        let word = self.chamber.group().longest_word_starting_with(g.i);
        self.left_mul_gen_via(g, m, &word)
    }

    /// `ξ_i^n · m` computed through a chosen reduced word starting with `i`.
    pub fn left_mul_gen_via(
        &self,
        g: MonoidGenerator,
        m: &MonoidElement,
        word: &Word,
    ) -> Result<MonoidElement, MonoidError> {
        let n = u64::try_from(g.n).map_err(|_| MonoidError::NegativeExponent(g.n))?;
        if word.first() != Some(g.i) {
            return Err(MonoidError::WrongFirstLetter);
        }
        let mut dw = self.chamber.realize(&self.point(m), word)?;
        dw.coords[0] = TropNat(dw.coords[0].0.min(n));
        Ok(MonoidElement {
            coords: from_trop(&self.chamber.canonical(&dw)?.coords),
        })
    }

    /// `m · ξ_i^n`: the last coordinate in a word ending with `i` becomes
    /// `min(n, c_N)`.
    pub fn right_mul_gen(
        &self,
        m: &MonoidElement,
        g: MonoidGenerator,
    ) -> Result<MonoidElement, MonoidError> {
        let n = u64::try_from(g.n).map_err(|_| MonoidError::NegativeExponent(g.n))?;
        let word = self.chamber.group().longest_word_ending_with(g.i);
        let mut dw = self.chamber.realize(&self.point(m), &word)?;
        let last = dw.coords.len() - 1;
        dw.coords[last] = TropNat(dw.coords[last].0.min(n));
        Ok(MonoidElement {
            coords: from_trop(&self.chamber.canonical(&dw)?.coords),
        })
    }

    /// Generator string of the normal form of `m`.
    pub fn generators(&self, m: &MonoidElement) -> Vec<MonoidGenerator> {
        self.chamber
            .base_word()
            .letters()
            .iter()
            .zip(&m.coords)
            .map(|(&i, &c)| MonoidGenerator { i, n: c as i64 })
            .collect()
    }

    /// Applies a generator string to `m`, rightmost generator first.
    pub fn apply_string(
        &self,
        gens: &[MonoidGenerator],
        m: &MonoidElement,
    ) -> Result<MonoidElement, MonoidError> {
        gens.iter()
            .rev()
            .try_fold(m.clone(), |acc, &g| self.left_mul_gen(g, &acc))
    }

    /// `m1 · m2 = ξ^{c₁}(… (ξ^{c_N} · m2))`.
    pub fn mul(
        &self,
        m1: &MonoidElement,
        m2: &MonoidElement,
    ) -> Result<MonoidElement, MonoidError> {
        self.apply_string(&self.generators(m1), m2)
    }

    /// Relabels the generator string by σ and renormalizes.
    pub fn sigma(
        &self,
        m: &MonoidElement,
        sigma: &DiagramAutomorphism,
    ) -> Result<MonoidElement, MonoidError> {
        Ok(MonoidElement {
            coords: from_trop(&self.chamber.sigma_action(&self.point(m), sigma)?.coords),
        })
    }

    pub fn is_sigma_fixed(
        &self,
        m: &MonoidElement,
        sigma: &DiagramAutomorphism,
    ) -> Result<bool, MonoidError> {
        Ok(self.sigma(m, sigma)? == *m)
    }

    /// `Φ_e`: every exponent of the normal form multiplied by `e`.
    pub fn frobenius(&self, e: u64, m: &MonoidElement) -> MonoidElement {
        MonoidElement {
            coords: m.coords.iter().map(|c| c * e).collect(),
        }
    }

    /// Coefficient of `α_i` in the weight `Σ c_k β_k`. Moves preserve the
    /// weight and `c₁ α_i` is one of its terms in a word starting with `i`,
    /// so this bounds `l_i`.
    pub fn weight_bound(&self, m: &MonoidElement, i: usize) -> u64 {
        self.base_roots
            .iter()
            .zip(&m.coords)
            .map(|(beta, &c)| c * beta[i] as u64)
            .sum()
    }

    /// Weight `Σ c_k β_k` in simple-root coordinates.
    pub fn weight(&self, m: &MonoidElement) -> Vec<u64> {
        (0..self.rank()).map(|i| self.weight_bound(m, i)).collect()
    }

    /// `l_i` as the least `n` with `ξ_i^n · m = m`.
    pub fn l_scan(&self, m: &MonoidElement, i: usize) -> Result<u64, MonoidError> {
        let bound = self.weight_bound(m, i);
        for a in 0..=bound {
            if self.left_mul_gen(MonoidGenerator { i, n: a as i64 }, m)? == *m {
                return Ok(a);
            }
        }
        Err(MonoidError::ScanExhausted(bound))
    }

    /// `l_i` as `λ_i`: the first coordinate in a word starting with `i`.
    pub fn l_coord(&self, m: &MonoidElement, i: usize) -> Result<u64, MonoidError> {
        Ok(self.chamber.lambda(&self.point(m), i)?.0)
    }

    /// `r_i` as the least `n` with `m · ξ_i^n = m`.
    pub fn r_scan(&self, m: &MonoidElement, i: usize) -> Result<u64, MonoidError> {
        // The last root of a word ending with `i` is simple but not
        // necessarily `α_i`, so bound by the full height.
        let bound: u64 = self.weight(m).iter().sum();
        for a in 0..=bound {
            if self.right_mul_gen(m, MonoidGenerator { i, n: a as i64 })? == *m {
                return Ok(a);
            }
        }
        Err(MonoidError::ScanExhausted(bound))
    }

    /// `r_i` as `ρ_i`: the last coordinate in a word ending with `i`.
    pub fn r_coord(&self, m: &MonoidElement, i: usize) -> Result<u64, MonoidError> {
        Ok(self.chamber.rho(&self.point(m), i)?.0)
    }

    /// From `l_i⁻¹(0)` to `l_i⁻¹(n)`: set the first coordinate to `n` in a
    /// word starting with `i`.
    pub fn raise_to(
        &self,
        m: &MonoidElement,
        i: usize,
        n: u64,
    ) -> Result<MonoidElement, MonoidError> {
        let word = self.chamber.group().longest_word_starting_with(i);
        let mut dw = self.chamber.realize(&self.point(m), &word)?;
        if dw.coords[0].0 != 0 {
            return Err(MonoidError::NotLowest {
                i: self.chamber.datum().label(i).to_string(),
                found: dw.coords[0].0,
            });
        }
        dw.coords[0] = TropNat(n);
        Ok(MonoidElement {
            coords: from_trop(&self.chamber.canonical(&dw)?.coords),
        })
    }

    /// `ξ_i^0 · m`, the inverse of [`raise_to`](Self::raise_to).
    pub fn lower_to_zero(&self, m: &MonoidElement, i: usize) -> Result<MonoidElement, MonoidError> {
        self.left_mul_gen(MonoidGenerator { i, n: 0 }, m)
    }

    /// One step along colour `i`: `l_i` goes up by one.
    pub fn raise_one(&self, m: &MonoidElement, i: usize) -> Result<MonoidElement, MonoidError> {
        let l = self.l_coord(m, i)?;
        self.raise_to(&self.lower_to_zero(m, i)?, i, l + 1)
    }

    /// Crystal graph on all elements with base coordinates at most `bound`;
    /// an `i`-edge joins `m` to [`raise_one`](Self::raise_one) when the
    /// target stays in range.
    pub fn crystal_graph(&self, bound: u64) -> Result<CrystalGraph, MonoidError> {
        let n = self.length();
        let mut vertices = Vec::new();
        let mut cur = vec![0u64; n];
        loop {
            vertices.push(MonoidElement {
                coords: cur.clone(),
            });
            let mut k = n;
            loop {
                if k == 0 {
                    let index: BTreeMap<MonoidElement, usize> = vertices
                        .iter()
                        .cloned()
                        .enumerate()
                        .map(|(a, v)| (v, a))
                        .collect();
                    let mut edges = Vec::new();
                    for (a, v) in vertices.iter().enumerate() {
                        for i in 0..self.rank() {
                            if let Some(&b) = index.get(&self.raise_one(v, i)?) {
                                edges.push((a, b, i));
                            }
                        }
                    }
                    return Ok(CrystalGraph { vertices, edges });
                }
                k -= 1;
                if cur[k] < bound {
                    cur[k] += 1;
                    break;
                }
                cur[k] = 0;
            }
        }
    }

    pub fn to_json(&self, m: &MonoidElement) -> serde_json::Value {
        let word = self.chamber.base_word().labels(self.chamber.datum());
        serde_json::to_value(ElementJson {
            word,
            coords: &m.coords,
        })
        .expect("plain data")
    }
}

#[derive(Clone, Debug)]
pub struct CrystalGraph {
    pub vertices: Vec<MonoidElement>,
    /// `(from, to, i)`.
    pub edges: Vec<(usize, usize, usize)>,
}

impl CrystalGraph {
    pub fn to_dot(&self, labels: &[String]) -> String {
        let name = |m: &MonoidElement| {
            let parts: Vec<String> = m.coords.iter().map(|c| c.to_string()).collect();
            format!("({})", parts.join(","))
        };
        let mut s = String::from("digraph crystal {\n");
        for v in &self.vertices {
            let _ = writeln!(s, "  \"{}\";", name(v));
        }
        for &(a, b, i) in &self.edges {
            let _ = writeln!(
                s,
                "  \"{}\" -> \"{}\" [label=\"{}\"];",
                name(&self.vertices[a]),
                name(&self.vertices[b]),
                labels[i]
            );
        }
        s.push_str("}\n");
        s
    }
}

/// Product of σ-fixed elements given by folded coordinates at the folded
/// base word.
pub fn folded_mul(folding: &Folding, f1: &[u64], f2: &[u64]) -> Result<Vec<u64>, MonoidError> {
    let monoid = Monoid::new(folding.chamber());
    let lift = |f: &[u64]| -> Result<MonoidElement, MonoidError> {
        let fdw = folding.decorate(folding.folded_base_word().clone(), to_trop(f))?;
        Ok(MonoidElement {
            coords: from_trop(&folding.s_map(&fdw)?.coords),
        })
    };
    let product = monoid.mul(&lift(f1)?, &lift(f2)?)?;
    if !monoid.is_sigma_fixed(&product, folding.sigma())? {
        return Err(MonoidError::NotSigmaFixed);
    }
    let fdw: FoldedDecoratedWord<TropNat> =
        folding.fold_coordinates(&monoid.point(&product), folding.folded_base_word())?;
    Ok(from_trop(&fdw.coords))
}

/// Folded `λ̲_η` of a point given by folded base coordinates in ℕ.
pub fn folded_l(folding: &Folding, f: &[u64], orbit: usize) -> Result<u64, MonoidError> {
    Ok(folding
        .folded_lambda(&FoldedChamberPoint { coords: to_trop(f) }, orbit)?
        .0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::builtin;

    fn chamber(name: &str) -> Chamber {
        Chamber::new(&builtin(name).unwrap().0).unwrap()
    }

    fn xi(i: usize, n: i64) -> MonoidGenerator {
        MonoidGenerator { i, n }
    }

    #[test]
    fn normal_forms() {
        let c = chamber("A2");
        let m = Monoid::new(&c);
        let w = |s| Word::parse(c.datum(), s).unwrap();
        assert_eq!(
            m.normal_form(&w("121"), &[0, 1, 2]).unwrap().coords,
            vec![0, 1, 2]
        );
        assert_eq!(
            m.normal_form(&w("212"), &[3, 0, 1]).unwrap().coords,
            vec![0, 1, 2]
        );
        let c1 = chamber("A1");
        let m1 = Monoid::new(&c1);
        assert_eq!(
            m1.normal_form(&Word(vec![0]), &[5]).unwrap().coords,
            vec![5]
        );
    }

    #[test]
    fn generator_action() {
        let c = chamber("A2");
        let m = Monoid::new(&c);
        let e = m.element(vec![3, 1, 2]).unwrap();
        assert_eq!(m.left_mul_gen(xi(0, 0), &e).unwrap().coords, vec![0, 1, 2]);
        let e = m.element(vec![0, 1, 2]).unwrap();
        assert_eq!(m.left_mul_gen(xi(0, 2), &e).unwrap(), e);
        assert_eq!(
            m.left_mul_gen(xi(0, -1), &e),
            Err(MonoidError::NegativeExponent(-1))
        );

        let c1 = chamber("A1");
        let m1 = Monoid::new(&c1);
        let e = m1.element(vec![5]).unwrap();
        assert_eq!(m1.left_mul_gen(xi(0, 3), &e).unwrap().coords, vec![3]);
        let a = m1.element(vec![4]).unwrap();
        let b = m1.element(vec![7]).unwrap();
        assert_eq!(m1.mul(&a, &b).unwrap().coords, vec![4]);
    }

    #[test]
    fn bottom_absorbs() {
        let c = chamber("A2");
        let m = Monoid::new(&c);
        let zero = m.element(vec![0, 0, 0]).unwrap();
        for x in 0..=3 {
            for y in 0..=3 {
                for z in 0..=3 {
                    let e = m.element(vec![x, y, z]).unwrap();
                    assert_eq!(m.mul(&zero, &e).unwrap(), zero);
                }
            }
        }
    }

    #[test]
    fn string_lengths() {
        let c = chamber("A2");
        let m = Monoid::new(&c);
        let e = m.element(vec![0, 1, 2]).unwrap();
        assert_eq!(m.l_scan(&e, 0).unwrap(), 0);
        assert_eq!(m.l_coord(&e, 1).unwrap(), 3);
        assert_eq!(m.l_scan(&e, 1).unwrap(), 3);
        assert_eq!(m.r_coord(&e, 0).unwrap(), 2);
        assert_eq!(m.r_scan(&e, 0).unwrap(), 2);
        // l_2 exceeds the largest coordinate plus one here.
        let e = m.element(vec![0, 2, 2]).unwrap();
        assert_eq!(m.l_scan(&e, 1).unwrap(), 4);
    }

    #[test]
    fn frobenius_scales() {
        let c = chamber("A2");
        let m = Monoid::new(&c);
        let e = m.element(vec![1, 2, 3]).unwrap();
        assert_eq!(m.frobenius(2, &e).coords, vec![2, 4, 6]);
        assert_eq!(m.frobenius(1, &e), e);
    }

    #[test]
    fn crystal_moves() {
        let c = chamber("A2");
        let m = Monoid::new(&c);
        let e = m.element(vec![0, 1, 2]).unwrap();
        let low = m.lower_to_zero(&e, 1).unwrap();
        assert_eq!(m.l_coord(&low, 1).unwrap(), 0);
        assert_eq!(m.raise_to(&low, 1, 3).unwrap(), e);
        assert!(matches!(
            m.raise_to(&e, 1, 1),
            Err(MonoidError::NotLowest { .. })
        ));
        let g = m.crystal_graph(1).unwrap();
        assert_eq!(g.vertices.len(), 8);
        let dot = g.to_dot(c.datum().labels());
        assert!(dot.starts_with("digraph crystal {"));
        for &(a, b, i) in &g.edges {
            let la = m.l_coord(&g.vertices[a], i).unwrap();
            assert_eq!(m.l_coord(&g.vertices[b], i).unwrap(), la + 1);
        }
    }

    #[test]
    fn folded_bottom_absorbs() {
        let f = Folding::builtin("Dstyle:n=2").unwrap();
        for x in [vec![1, 2, 3, 4], vec![0, 5, 1, 1], vec![2, 2, 2, 2]] {
            assert_eq!(folded_mul(&f, &[0, 0, 0, 0], &x).unwrap(), vec![0, 0, 0, 0]);
        }
    }
}
