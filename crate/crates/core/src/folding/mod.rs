//! Folded decorated words and their transition maps.
//!
//! A word `η₁ … η_N̄` over σ-orbits unfolds into a reduced word of the
//! simply laced datum by replacing each `η_j` with a reduced word `𝔡_j` for
//! the longest element of the parabolic subgroup on `η_j`. Coordinate `𝔠_j`
//! becomes `𝔠_j` on letters that occur `ε_j` times in `𝔡_j` and `2𝔠_j`
//! otherwise, so an `A₂`-type orbit `{i, i'}` carries `i^𝔠 i'^{2𝔠} i^𝔠`.
//! Folded transition maps are computed by unfolding, moving in the simply
//! laced model, and folding back.

pub mod chain;

use thiserror::Error;

use crate::cartan::{fold, CartanDatum, CartanError, DiagramAutomorphism, FoldedDatum};
use crate::chamber::{Chamber, ChamberError, ChamberPoint, DecoratedWord, TraceStep};
use crate::semifield::{Semifield, SemifieldError, SemifieldValue, TropInt, TropNat};
use crate::weyl::{WeylElement, WeylError, WeylGroup, Word, DEFAULT_WORD_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FoldingError {
    #[error(transparent)]
    Cartan(#[from] CartanError),
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error(transparent)]
    Chamber(#[from] ChamberError),
    #[error(transparent)]
    Semifield(#[from] SemifieldError),
    #[error("filling does not match the folded word at position {0}")]
    BadFilling(usize),
    #[error("unfolded word does not split into orbit blocks at letter {0}")]
    NotBlockDecomposable(usize),
    #[error("coordinates at letter {0} break the folded pattern; the point is not σ-fixed")]
    PatternViolation(usize),
    #[error("word {0} is not a reduced word for the folded longest element")]
    NotFoldedLongest(String),
    #[error("coordinate count {coords} does not match folded word length {word}")]
    LengthMismatch { word: usize, coords: usize },
    #[error("tropical natural closed form left ℕ at {0:?}")]
    TropicalUnderflow([i64; 4]),
}

impl FoldingError {
    pub fn kind(&self) -> &'static str {
        match self {
            FoldingError::Cartan(e) => e.kind(),
            FoldingError::Weyl(e) => e.kind(),
            FoldingError::Chamber(e) => e.kind(),
            FoldingError::Semifield(e) => e.kind(),
            FoldingError::BadFilling(_) => "bad_filling",
            FoldingError::NotBlockDecomposable(_) => "not_block_decomposable",
            FoldingError::PatternViolation(_) => "pattern_violation",
            FoldingError::NotFoldedLongest(_) => "not_reduced",
            FoldingError::LengthMismatch { .. } => "length_mismatch",
            FoldingError::TropicalUnderflow(_) => "tropical_underflow",
        }
    }
}

/// `η₁^{𝔠₁} … η_N̄^{𝔠_N̄}`, letters are orbit indices of the folded datum.
#[derive(Clone, Debug, PartialEq)]
pub struct FoldedDecoratedWord<K> {
    pub word: Word,
    pub coords: Vec<K>,
}

impl FoldedDecoratedWord<SemifieldValue> {
    pub fn to_json(&self, folded: &CartanDatum) -> serde_json::Value {
        DecoratedWord {
            word: self.word.clone(),
            coords: self.coords.clone(),
        }
        .to_json(folded)
    }
}

/// Coordinates of a folded component at the folded base word.
#[derive(Clone, Debug, PartialEq)]
pub struct FoldedChamberPoint<K> {
    pub coords: Vec<K>,
}

/// One reduced word `𝔡_j` per letter of a folded word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrbitWordFilling {
    pub blocks: Vec<Word>,
}

impl OrbitWordFilling {
    /// `ε_{j,k}` for each block: how often the `k`-th letter occurs in `𝔡_j`.
    pub fn eps(&self) -> Vec<Vec<u8>> {
        self.blocks
            .iter()
            .map(|b| {
                b.0.iter()
                    .map(|h| b.0.iter().filter(|x| *x == h).count() as u8)
                    .collect()
            })
            .collect()
    }

    /// `ε_j = max_k ε_{j,k}`.
    pub fn eps_max(&self) -> Vec<u8> {
        self.eps()
            .into_iter()
            .map(|e| e.into_iter().max().unwrap_or(1))
            .collect()
    }

    pub fn concatenation(&self) -> Word {
        Word(
            self.blocks
                .iter()
                .flat_map(|b| b.0.iter().copied())
                .collect(),
        )
    }
}

/// A folding `(I, ·, σ) → (Ī, ∘)` with the machinery of both sides.
#[derive(Debug)]
pub struct Folding {
    chamber: Chamber,
    sigma: DiagramAutomorphism,
    folded: FoldedDatum,
    folded_group: WeylGroup,
    folded_base: Word,
    orbit_words: Vec<Word>,
    orbit_elements: Vec<WeylElement>,
}

impl Folding {
    pub fn new(datum: &CartanDatum, sigma: &DiagramAutomorphism) -> Result<Self, FoldingError> {
        let folded = fold(datum, sigma)?;
        let chamber = Chamber::new(datum)?;
        let mut orbit_words = Vec::new();
        let mut orbit_elements = Vec::new();
        for orbit in &folded.orbits {
            let (w, _, word) = chamber.group().orbit_longest(orbit)?;
            orbit_words.push(word);
            orbit_elements.push(w);
        }
        let folded_group = WeylGroup::new(&folded.folded);
        let folded_base = folded_group.lex_least_word(folded_group.longest());
        Ok(Folding {
            chamber,
            sigma: sigma.clone(),
            folded,
            folded_group,
            folded_base,
            orbit_words,
            orbit_elements,
        })
    }

    /// Folding of a builtin datum along its automorphism (identity if none).
    pub fn builtin(name: &str) -> Result<Self, FoldingError> {
        let (datum, sigma) = crate::cartan::builtin(name)?;
        let sigma = sigma.unwrap_or_else(|| DiagramAutomorphism::identity(&datum));
        Folding::new(&datum, &sigma)
    }

    pub fn source(&self) -> &CartanDatum {
        self.chamber.datum()
    }

    pub fn chamber(&self) -> &Chamber {
        &self.chamber
    }

    pub fn sigma(&self) -> &DiagramAutomorphism {
        &self.sigma
    }

    pub fn folded(&self) -> &FoldedDatum {
        &self.folded
    }

    pub fn folded_datum(&self) -> &CartanDatum {
        &self.folded.folded
    }

    pub fn folded_group(&self) -> &WeylGroup {
        &self.folded_group
    }

    /// Lexicographically least reduced word for the folded `w̄₀`.
    pub fn folded_base_word(&self) -> &Word {
        &self.folded_base
    }

    /// Canonical reduced word for `w_η`.
    pub fn orbit_word(&self, orbit: usize) -> &Word {
        &self.orbit_words[orbit]
    }

    pub fn check_folded_word(&self, word: &Word) -> Result<(), FoldingError> {
        if self.folded_group.is_reduced_for_longest(word) {
            Ok(())
        } else {
            Err(FoldingError::NotFoldedLongest(
                word.display(self.folded_datum()).to_string(),
            ))
        }
    }

    pub fn folded_word(&self, text: &str) -> Result<Word, FoldingError> {
        let w = Word::parse(self.folded_datum(), text)?;
        self.check_folded_word(&w)?;
        Ok(w)
    }

    pub fn decorate<K: Semifield>(
        &self,
        word: Word,
        coords: Vec<K>,
    ) -> Result<FoldedDecoratedWord<K>, FoldingError> {
        self.check_folded_word(&word)?;
        if coords.len() != word.len() {
            return Err(FoldingError::LengthMismatch {
                word: word.len(),
                coords: coords.len(),
            });
        }
        Ok(FoldedDecoratedWord { word, coords })
    }

    pub fn default_filling(&self, word: &Word) -> OrbitWordFilling {
        OrbitWordFilling {
            blocks: word
                .0
                .iter()
                .map(|&o| self.orbit_words[o].clone())
                .collect(),
        }
    }

    pub fn check_filling(
        &self,
        word: &Word,
        filling: &OrbitWordFilling,
    ) -> Result<(), FoldingError> {
        if filling.blocks.len() != word.len() {
            return Err(FoldingError::BadFilling(word.len()));
        }
        for (j, (&o, block)) in word.0.iter().zip(&filling.blocks).enumerate() {
            let n = self.orbit_words[o].len();
            let in_orbit = block.0.iter().all(|i| self.folded.orbits[o].contains(i));
            if block.len() != n
                || !in_orbit
                || self.chamber.group().element(block) != self.orbit_elements[o]
            {
                return Err(FoldingError::BadFilling(j));
            }
        }
        Ok(())
    }

    /// Every filling of `word`: all reduced words for each `w_{η_j}`.
    pub fn all_fillings(&self, word: &Word) -> Result<Vec<OrbitWordFilling>, FoldingError> {
        let mut per_orbit = Vec::new();
        for w in &self.orbit_elements {
            per_orbit.push(self.chamber.group().reduced_words(w, DEFAULT_WORD_CAP)?);
        }
        let mut out = vec![Vec::new()];
        for &o in &word.0 {
            let mut next = Vec::with_capacity(out.len() * per_orbit[o].len());
            for prefix in &out {
                for choice in &per_orbit[o] {
                    let mut p: Vec<Word> = prefix.clone();
                    p.push(choice.clone());
                    next.push(p);
                }
            }
            out = next;
        }
        Ok(out
            .into_iter()
            .map(|blocks| OrbitWordFilling { blocks })
            .collect())
    }

    pub fn unfold_with<K: Semifield>(
        &self,
        fdw: &FoldedDecoratedWord<K>,
        filling: &OrbitWordFilling,
    ) -> Result<DecoratedWord<K>, FoldingError> {
        self.check_filling(&fdw.word, filling)?;
        let mut coords = Vec::new();
        for ((eps, eps_max), c) in filling.eps().iter().zip(filling.eps_max()).zip(&fdw.coords) {
            for &e in eps {
                coords.push(if e == eps_max {
                    c.clone()
                } else {
                    c.nfold_sum(2)?
                });
            }
        }
        Ok(DecoratedWord::new(filling.concatenation(), coords)?)
    }

    pub fn unfold<K: Semifield>(
        &self,
        fdw: &FoldedDecoratedWord<K>,
    ) -> Result<DecoratedWord<K>, FoldingError> {
        self.unfold_with(fdw, &self.default_filling(&fdw.word))
    }

    /// `s`: the component of the unfolded word.
    pub fn s_map<K: Semifield>(
        &self,
        fdw: &FoldedDecoratedWord<K>,
    ) -> Result<ChamberPoint<K>, FoldingError> {
        Ok(self.chamber.canonical(&self.unfold(fdw)?)?)
    }

    pub fn s_map_with<K: Semifield>(
        &self,
        fdw: &FoldedDecoratedWord<K>,
        filling: &OrbitWordFilling,
    ) -> Result<ChamberPoint<K>, FoldingError> {
        Ok(self.chamber.canonical(&self.unfold_with(fdw, filling)?)?)
    }

    /// Splits an unfolded decorated word into orbit blocks, checks the
    /// `(𝔠, 2𝔠)` pattern and reads off the folded coordinates.
    pub fn fold_decorated<K: Semifield>(
        &self,
        dw: &DecoratedWord<K>,
    ) -> Result<(FoldedDecoratedWord<K>, OrbitWordFilling), FoldingError> {
        let letters = &dw.word.0;
        let mut pos = 0;
        let mut word = Vec::new();
        let mut blocks = Vec::new();
        while pos < letters.len() {
            let o = self.folded.orbit_of(letters[pos]);
            let n = self.orbit_words[o].len();
            if pos + n > letters.len() {
                return Err(FoldingError::NotBlockDecomposable(pos));
            }
            let block = Word(letters[pos..pos + n].to_vec());
            let in_orbit = block.0.iter().all(|i| self.folded.orbits[o].contains(i));
            if !in_orbit || self.chamber.group().element(&block) != self.orbit_elements[o] {
                return Err(FoldingError::NotBlockDecomposable(pos));
            }
            word.push(o);
            blocks.push(block);
            pos += n;
        }
        let filling = OrbitWordFilling { blocks };
        let mut coords = Vec::new();
        let mut offset = 0;
        for (eps, eps_max) in filling.eps().iter().zip(filling.eps_max()) {
            let block = &dw.coords[offset..offset + eps.len()];
            let k = eps
                .iter()
                .position(|&e| e == eps_max)
                .expect("maximum is attained");
            let c = block[k].clone();
            let doubled = c.nfold_sum(2)?;
            for (t, (&e, v)) in eps.iter().zip(block).enumerate() {
                let expected = if e == eps_max { &c } else { &doubled };
                if v != expected {
                    return Err(FoldingError::PatternViolation(offset + t));
                }
            }
            coords.push(c);
            offset += eps.len();
        }
        Ok((
            FoldedDecoratedWord {
                word: Word(word),
                coords,
            },
            filling,
        ))
    }

    /// `ᾱ_{η_*}⁻¹`: folded coordinates of a σ-fixed point on `target`.
    pub fn fold_coordinates<K: Semifield>(
        &self,
        cp: &ChamberPoint<K>,
        target: &Word,
    ) -> Result<FoldedDecoratedWord<K>, FoldingError> {
        self.check_folded_word(target)?;
        let unfolded = self.default_filling(target).concatenation();
        let dw = self.chamber.realize(cp, &unfolded)?;
        Ok(self.fold_decorated(&dw)?.0)
    }

    /// `R̄`: unfold, move to the unfolded target word, fold back.
    pub fn folded_transition<K: Semifield>(
        &self,
        fdw: &FoldedDecoratedWord<K>,
        to: &Word,
    ) -> Result<FoldedDecoratedWord<K>, FoldingError> {
        self.check_folded_word(to)?;
        let target = self.default_filling(to).concatenation();
        let moved = self.chamber.transition(&self.unfold(fdw)?, &target)?;
        Ok(self.fold_decorated(&moved)?.0)
    }

    /// Same as [`folded_transition`](Self::folded_transition), also returning
    /// the simply laced path taken.
    pub fn folded_transition_trace<K: Semifield>(
        &self,
        fdw: &FoldedDecoratedWord<K>,
        to: &Word,
    ) -> Result<(FoldedDecoratedWord<K>, Vec<TraceStep<K>>), FoldingError> {
        self.check_folded_word(to)?;
        let target = self.default_filling(to).concatenation();
        let trace = self.chamber.transition_trace(&self.unfold(fdw)?, &target)?;
        let last = &trace.last().expect("trace starts with the input").decorated;
        Ok((self.fold_decorated(last)?.0, trace))
    }

    pub fn folded_canonical<K: Semifield>(
        &self,
        fdw: &FoldedDecoratedWord<K>,
    ) -> Result<FoldedChamberPoint<K>, FoldingError> {
        Ok(FoldedChamberPoint {
            coords: self.folded_transition(fdw, &self.folded_base)?.coords,
        })
    }

    pub fn folded_realize<K: Semifield>(
        &self,
        fcp: &FoldedChamberPoint<K>,
        word: &Word,
    ) -> Result<FoldedDecoratedWord<K>, FoldingError> {
        let at_base = FoldedDecoratedWord {
            word: self.folded_base.clone(),
            coords: fcp.coords.clone(),
        };
        self.folded_transition(&at_base, word)
    }

    /// `s̄`: the σ-fixed component attached to a folded component.
    pub fn s_bar<K: Semifield>(
        &self,
        fcp: &FoldedChamberPoint<K>,
    ) -> Result<ChamberPoint<K>, FoldingError> {
        self.s_map(&FoldedDecoratedWord {
            word: self.folded_base.clone(),
            coords: fcp.coords.clone(),
        })
    }

    /// `λ̲_η`: first folded coordinate in a folded word starting with `η`.
    pub fn folded_lambda<K: Semifield>(
        &self,
        fcp: &FoldedChamberPoint<K>,
        orbit: usize,
    ) -> Result<K, FoldingError> {
        let word = self.folded_group.longest_word_starting_with(orbit);
        Ok(self.folded_realize(fcp, &word)?.coords[0].clone())
    }

    /// `ρ̲_η`: last folded coordinate in a folded word ending with `η`.
    pub fn folded_rho<K: Semifield>(
        &self,
        fcp: &FoldedChamberPoint<K>,
        orbit: usize,
    ) -> Result<K, FoldingError> {
        let word = self.folded_group.longest_word_ending_with(orbit);
        let fdw = self.folded_realize(fcp, &word)?;
        Ok(fdw.coords[fdw.coords.len() - 1].clone())
    }

    /// `λ_η` on a σ-fixed point, read through each node of `η`. The values
    /// agree on σ-fixed points; all of them are returned so callers can check.
    pub fn lambda_eta<K: Semifield>(
        &self,
        cp: &ChamberPoint<K>,
        orbit: usize,
    ) -> Result<Vec<K>, FoldingError> {
        self.folded.orbits[orbit]
            .iter()
            .map(|&i| self.chamber.lambda(cp, i).map_err(FoldingError::from))
            .collect()
    }

    pub fn rho_eta<K: Semifield>(
        &self,
        cp: &ChamberPoint<K>,
        orbit: usize,
    ) -> Result<Vec<K>, FoldingError> {
        self.folded.orbits[orbit]
            .iter()
            .map(|&i| self.chamber.rho(cp, i).map_err(FoldingError::from))
            .collect()
    }
}

/// The rank-two transition `(d, c, b, a) ↦ (d', c', b', a')` from the folded
/// word `2̄1̄2̄1̄` to `1̄2̄1̄2̄`, with `α = ab + ad + cd` and
/// `ε = ab² + ad² + cd² + 2abd`:
/// `d' = ab²c/ε`, `c' = ε/α`, `b' = α²/ε`, `a' = bcd/α`.
pub fn b2_closed_form<K: Semifield>(d: &K, c: &K, b: &K, a: &K) -> Result<[K; 4], SemifieldError> {
    let ab = a.mul(b)?;
    let alpha = ab.add(&a.mul(d)?)?.add(&c.mul(d)?)?;
    let b2 = b.mul(b)?;
    let d2 = d.mul(d)?;
    let eps = a
        .mul(&b2)?
        .add(&a.mul(&d2)?)?
        .add(&c.mul(&d2)?)?
        .add(&ab.mul(d)?.nfold_sum(2)?)?;
    Ok([
        a.mul(&b2)?.mul(c)?.div(&eps)?,
        eps.div(&alpha)?,
        alpha.mul(&alpha)?.div(&eps)?,
        b.mul(c)?.mul(d)?.div(&alpha)?,
    ])
}

/// The inverse direction, `1̄2̄1̄2̄ → 2̄1̄2̄1̄`: reverse, apply
/// [`b2_closed_form`], reverse.
pub fn b2_closed_form_inverse<K: Semifield>(
    a: &K,
    b: &K,
    c: &K,
    d: &K,
) -> Result<[K; 4], SemifieldError> {
    let [x, y, z, w] = b2_closed_form(d, c, b, a)?;
    Ok([w, z, y, x])
}

/// Min-plus form of [`b2_closed_form`] written with the two minima
/// `m1 = min(a+2b, a+2d, c+2d)` and `m2 = min(a+b, a+d, c+d)`.
pub fn b2_tropical(d: i64, c: i64, b: i64, a: i64) -> [i64; 4] {
    let m1 = (a + 2 * b).min(a + 2 * d).min(c + 2 * d);
    let m2 = (a + b).min(a + d).min(c + d);
    [a + 2 * b + c - m1, m1 - m2, 2 * m2 - m1, b + c + d - m2]
}

/// [`b2_tropical`] on ℕ⁴; fails if an output is negative.
pub fn b2_tropical_nat(d: u64, c: u64, b: u64, a: u64) -> Result<[u64; 4], FoldingError> {
    let out = b2_tropical(d as i64, c as i64, b as i64, a as i64);
    if out.iter().any(|&x| x < 0) {
        return Err(FoldingError::TropicalUnderflow(out));
    }
    Ok(out.map(|x| x as u64))
}

/// `a + b + d ≥ min(a + 2b, a + 2d)`, which keeps `b2_tropical` in ℕ.
pub fn b2_tropical_inequality(d: i64, _c: i64, b: i64, a: i64) -> bool {
    a + b + d >= (a + 2 * b).min(a + 2 * d)
}

pub fn trop_int(v: &[i64]) -> Vec<TropInt> {
    v.iter().map(|&x| TropInt(x)).collect()
}

pub fn trop_nat(v: &[u64]) -> Vec<TropNat> {
    v.iter().map(|&x| TropNat(x)).collect()
}

/// The two simply laced models of the rank-two folded datum.
pub struct B2Models {
    pub from_a3: Folding,
    pub from_a4: Folding,
}

impl B2Models {
    pub fn new() -> Result<Self, FoldingError> {
        Ok(B2Models {
            from_a3: Folding::builtin("Dstyle:n=2")?,
            from_a4: Folding::builtin("A4+flip")?,
        })
    }

    /// Folded transition `2̄1̄2̄1̄ → 1̄2̄1̄2̄` in both models.
    pub fn transitions<K: Semifield>(
        &self,
        coords: &[K],
    ) -> Result<(Vec<K>, Vec<K>), FoldingError> {
        let from = Word(vec![1, 0, 1, 0]);
        let to = Word(vec![0, 1, 0, 1]);
        let run = |f: &Folding| -> Result<Vec<K>, FoldingError> {
            let fdw = f.decorate(from.clone(), coords.to_vec())?;
            Ok(f.folded_transition(&fdw, &to)?.coords)
        };
        Ok((run(&self.from_a3)?, run(&self.from_a4)?))
    }

    /// Whether the two models give the same folded transition on `coords`.
    pub fn compare_models<K: Semifield>(&self, coords: &[K]) -> Result<bool, FoldingError> {
        let (x, y) = self.transitions(coords)?;
        Ok(x == y)
    }
}
