//! Decorated reduced words of a simply laced datum and the transition maps
//! between them.
//!
//! A decorated word `i₁^{c₁} … i_N^{c_N}` pairs a reduced word for `w₀`
//! with one semifield value per letter. Braid moves act on coordinates by
//! the 2-move (swap) and the 3-move
//! `(x, y, z) ↦ (yz/(x+z), x+z, xy/(x+z))`. A component of the resulting
//! graph is stored as its coordinates at a fixed base word.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, Mutex};

use thiserror::Error;

use crate::cartan::{CartanDatum, DiagramAutomorphism};
use crate::semifield::{Semifield, SemifieldError, SemifieldValue};
use crate::weyl::{braid_neighbors, WeylError, WeylGroup, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChamberError {
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error(transparent)]
    Semifield(#[from] SemifieldError),
    #[error("decorated words need a simply laced datum")]
    NotSimplyLaced,
    #[error("word has {word} letters but {coords} coordinates were given")]
    LengthMismatch { word: usize, coords: usize },
    #[error("coordinates mix semifield models")]
    MixedModels,
    #[error("no braid move of length {r} at position {k}")]
    InvalidMove { k: usize, r: usize },
    #[error("no braid-move path between the two words")]
    Unreachable,
}

impl ChamberError {
    pub fn kind(&self) -> &'static str {
        match self {
            ChamberError::Weyl(e) => e.kind(),
            ChamberError::Semifield(e) => e.kind(),
            ChamberError::NotSimplyLaced => "not_simply_laced",
            ChamberError::LengthMismatch { .. } => "length_mismatch",
            ChamberError::MixedModels => "mixed_models",
            ChamberError::InvalidMove { .. } => "invalid_move",
            ChamberError::Unreachable => "unreachable",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DecoratedWord<K> {
    pub word: Word,
    pub coords: Vec<K>,
}

impl<K: Semifield> DecoratedWord<K> {
    pub fn new(word: Word, coords: Vec<K>) -> Result<Self, ChamberError> {
        if word.len() != coords.len() {
            return Err(ChamberError::LengthMismatch {
                word: word.len(),
                coords: coords.len(),
            });
        }
        if let Some(first) = coords.first() {
            if coords.iter().any(|c| c.model() != first.model()) {
                return Err(ChamberError::MixedModels);
            }
        }
        Ok(DecoratedWord { word, coords })
    }

    /// Relabels letters by σ and keeps the coordinates.
    pub fn sigma_action(&self, sigma: &DiagramAutomorphism) -> Self {
        DecoratedWord {
            word: Word(self.word.0.iter().map(|&i| sigma.apply(i)).collect()),
            coords: self.coords.clone(),
        }
    }

    pub fn display<'a>(&'a self, datum: &'a CartanDatum) -> DecoratedDisplay<'a, K> {
        DecoratedDisplay { dw: self, datum }
    }
}

/// `i^{c}` blocks written one after another.
pub struct DecoratedDisplay<'a, K> {
    dw: &'a DecoratedWord<K>,
    datum: &'a CartanDatum,
}

impl<K: fmt::Display> fmt::Display for DecoratedDisplay<'_, K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.dw.word.0.iter().zip(&self.dw.coords) {
            write!(f, "{}^{{{}}}", self.datum.label(*i), c)?;
        }
        Ok(())
    }
}

impl DecoratedWord<SemifieldValue> {
    /// `[{"i": label, "c": value}, ...]`
    pub fn to_json(&self, datum: &CartanDatum) -> serde_json::Value {
        serde_json::Value::Array(
            self.word
                .0
                .iter()
                .zip(&self.coords)
                .map(|(&i, c)| serde_json::json!({"i": datum.label(i), "c": c.to_json()}))
                .collect(),
        )
    }
}

/// Applies the braid move of length `r` starting at 0-based position `k`.
pub fn apply_move<K: Semifield>(
    datum: &CartanDatum,
    dw: &DecoratedWord<K>,
    k: usize,
    r: usize,
) -> Result<DecoratedWord<K>, ChamberError> {
    let w = &dw.word.0;
    let invalid = ChamberError::InvalidMove { k, r };
    if k + r > w.len() || r < 2 {
        return Err(invalid);
    }
    let (p, q) = (w[k], w[k + 1]);
    if p == q || datum.h_value(p, q).ok() != Some(r) {
        return Err(invalid);
    }
    if (0..r).any(|t| w[k + t] != if t % 2 == 0 { p } else { q }) {
        return Err(invalid);
    }
    let mut word = w.clone();
    for t in 0..r {
        word[k + t] = if t % 2 == 0 { q } else { p };
    }
    let mut coords = dw.coords.clone();
    match r {
        2 => coords.swap(k, k + 1),
        3 => {
            let (x, y, z) = (&dw.coords[k], &dw.coords[k + 1], &dw.coords[k + 2]);
            let s = x.add(z)?;
            coords[k] = y.mul(z)?.div(&s)?;
            coords[k + 2] = x.mul(y)?.div(&s)?;
            coords[k + 1] = s;
        }
        _ => return Err(ChamberError::NotSimplyLaced),
    }
    Ok(DecoratedWord {
        word: Word(word),
        coords,
    })
}

/// One step of a transition: the decorated word reached and the move
/// `(k, r)` that produced it (absent for the starting word).
#[derive(Clone, Debug, PartialEq)]
pub struct TraceStep<K> {
    pub decorated: DecoratedWord<K>,
    pub step: Option<(usize, usize)>,
}

/// Coordinates of a component at the base word.
#[derive(Clone, Debug, PartialEq)]
pub struct ChamberPoint<K> {
    pub coords: Vec<K>,
}

type Neighbors = Arc<Vec<(Word, usize, usize)>>;
type MovePath = Arc<Vec<(usize, usize)>>;

/// Decorated-word machinery for one simply laced datum. Braid-move
/// adjacency and paths are memoized; all methods take `&self`.
#[derive(Debug)]
pub struct Chamber {
    group: WeylGroup,
    base: Word,
    adjacency: Mutex<HashMap<Word, Neighbors>>,
    paths: Mutex<HashMap<(Word, Word), MovePath>>,
}

impl Chamber {
    pub fn new(datum: &CartanDatum) -> Result<Self, ChamberError> {
        if !datum.is_simply_laced() {
            return Err(ChamberError::NotSimplyLaced);
        }
        let group = WeylGroup::new(datum);
        let base = group.lex_least_word(group.longest());
        Ok(Chamber {
            group,
            base,
            adjacency: Mutex::new(HashMap::new()),
            paths: Mutex::new(HashMap::new()),
        })
    }

    pub fn datum(&self) -> &CartanDatum {
        self.group.datum()
    }

    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    /// The lexicographically least reduced word for `w₀`.
    pub fn base_word(&self) -> &Word {
        &self.base
    }

    pub fn longest_length(&self) -> usize {
        self.group.longest_length()
    }

    /// Validates `word` as a reduced word for `w₀` and attaches coordinates.
    pub fn decorate<K: Semifield>(
        &self,
        word: Word,
        coords: Vec<K>,
    ) -> Result<DecoratedWord<K>, ChamberError> {
        self.group.check_longest_word(&word)?;
        DecoratedWord::new(word, coords)
    }

    pub fn apply_move<K: Semifield>(
        &self,
        dw: &DecoratedWord<K>,
        k: usize,
        r: usize,
    ) -> Result<DecoratedWord<K>, ChamberError> {
        apply_move(self.datum(), dw, k, r)
    }

    fn neighbors(&self, w: &Word) -> Neighbors {
        if let Some(n) = self.adjacency.lock().expect("adjacency lock").get(w) {
            return n.clone();
        }
        let n = Arc::new(braid_neighbors(self.datum(), w));
        self.adjacency
            .lock()
            .expect("adjacency lock")
            .insert(w.clone(), n.clone());
        n
    }

    /// Moves `(k, r)` leading from `from` to `to`, found by breadth-first
    /// search with neighbors visited in lexicographic order.
    pub fn path(&self, from: &Word, to: &Word) -> Result<Arc<Vec<(usize, usize)>>, ChamberError> {
        let key = (from.clone(), to.clone());
        if let Some(p) = self.paths.lock().expect("path lock").get(&key) {
            return Ok(p.clone());
        }
        let mut parent: HashMap<Word, Option<(Word, usize, usize)>> = HashMap::new();
        parent.insert(from.clone(), None);
        let mut queue = VecDeque::from([from.clone()]);
        let mut found = from == to;
        while let Some(w) = queue.pop_front() {
            if found {
                break;
            }
            for (nb, k, r) in self.neighbors(&w).iter() {
                if parent.contains_key(nb) {
                    continue;
                }
                parent.insert(nb.clone(), Some((w.clone(), *k, *r)));
                if nb == to {
                    found = true;
                    break;
                }
                queue.push_back(nb.clone());
            }
        }
        if !found {
            return Err(ChamberError::Unreachable);
        }
        let mut moves = Vec::new();
        let mut cur = to.clone();
        while let Some(Some((prev, k, r))) = parent.get(&cur) {
            moves.push((*k, *r));
            cur = prev.clone();
        }
        moves.reverse();
        let moves = Arc::new(moves);
        self.paths
            .lock()
            .expect("path lock")
            .insert(key, moves.clone());
        Ok(moves)
    }

    /// Transports coordinates from `dw.word` to `to` along braid moves.
    pub fn transition<K: Semifield>(
        &self,
        dw: &DecoratedWord<K>,
        to: &Word,
    ) -> Result<DecoratedWord<K>, ChamberError> {
        self.group.check_longest_word(to)?;
        let mut cur = dw.clone();
        for &(k, r) in self.path(&dw.word, to)?.iter() {
            cur = apply_move(self.datum(), &cur, k, r)?;
        }
        Ok(cur)
    }

    /// Same as [`transition`](Self::transition), keeping every intermediate
    /// decorated word.
    pub fn transition_trace<K: Semifield>(
        &self,
        dw: &DecoratedWord<K>,
        to: &Word,
    ) -> Result<Vec<TraceStep<K>>, ChamberError> {
        self.group.check_longest_word(to)?;
        let mut trace = vec![TraceStep {
            decorated: dw.clone(),
            step: None,
        }];
        for &(k, r) in self.path(&dw.word, to)?.iter() {
            let next = apply_move(
                self.datum(),
                &trace.last().expect("nonempty").decorated,
                k,
                r,
            )?;
            trace.push(TraceStep {
                decorated: next,
                step: Some((k, r)),
            });
        }
        Ok(trace)
    }

    pub fn canonical<K: Semifield>(
        &self,
        dw: &DecoratedWord<K>,
    ) -> Result<ChamberPoint<K>, ChamberError> {
        Ok(ChamberPoint {
            coords: self.transition(dw, &self.base)?.coords,
        })
    }

    pub fn realize<K: Semifield>(
        &self,
        cp: &ChamberPoint<K>,
        word: &Word,
    ) -> Result<DecoratedWord<K>, ChamberError> {
        let at_base = DecoratedWord::new(self.base.clone(), cp.coords.clone())?;
        self.transition(&at_base, word)
    }

    /// First coordinate in the given word, which must start with `i`.
    pub fn lambda_via<K: Semifield>(
        &self,
        cp: &ChamberPoint<K>,
        word: &Word,
    ) -> Result<K, ChamberError> {
        Ok(self.realize(cp, word)?.coords[0].clone())
    }

    /// Last coordinate in the given word, which must end with `i`.
    pub fn rho_via<K: Semifield>(
        &self,
        cp: &ChamberPoint<K>,
        word: &Word,
    ) -> Result<K, ChamberError> {
        let dw = self.realize(cp, word)?;
        Ok(dw.coords[dw.coords.len() - 1].clone())
    }

    /// `λ_i`: the first coordinate in a word starting with `i`.
    pub fn lambda<K: Semifield>(&self, cp: &ChamberPoint<K>, i: usize) -> Result<K, ChamberError> {
        self.lambda_via(cp, &self.group.longest_word_starting_with(i))
    }

    /// `ρ_i`: the last coordinate in a word ending with `i`.
    pub fn rho<K: Semifield>(&self, cp: &ChamberPoint<K>, i: usize) -> Result<K, ChamberError> {
        self.rho_via(cp, &self.group.longest_word_ending_with(i))
    }

    pub fn sigma_action<K: Semifield>(
        &self,
        cp: &ChamberPoint<K>,
        sigma: &DiagramAutomorphism,
    ) -> Result<ChamberPoint<K>, ChamberError> {
        let at_base = DecoratedWord::new(self.base.clone(), cp.coords.clone())?;
        self.canonical(&at_base.sigma_action(sigma))
    }

    pub fn is_sigma_fixed<K: Semifield>(
        &self,
        cp: &ChamberPoint<K>,
        sigma: &DiagramAutomorphism,
    ) -> Result<bool, ChamberError> {
        Ok(self.sigma_action(cp, sigma)? == *cp)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::builtin;
    use crate::semifield::{PosRat, SymRat, TropInt, TropNat, Vars};
    use proptest::prelude::*;

    fn chamber(name: &str) -> Chamber {
        Chamber::new(&builtin(name).unwrap().0).unwrap()
    }

    fn word(c: &Chamber, s: &str) -> Word {
        Word::parse(c.datum(), s).unwrap()
    }

    fn tz(v: &[i64]) -> Vec<TropInt> {
        v.iter().map(|&x| TropInt(x)).collect()
    }

    #[test]
    fn three_move_rational_and_tropical() {
        let c = chamber("A2");
        let q = |n, d| PosRat::from_frac(n, d).unwrap();
        let dw = DecoratedWord::new(word(&c, "121"), vec![q(2, 1), q(3, 1), q(2, 1)]).unwrap();
        let out = c.apply_move(&dw, 0, 3).unwrap();
        assert_eq!(out.word, word(&c, "212"));
        assert_eq!(out.coords, vec![q(3, 2), q(4, 1), q(3, 2)]);

        let dw = DecoratedWord::new(word(&c, "121"), tz(&[1, 5, 2])).unwrap();
        assert_eq!(c.apply_move(&dw, 0, 3).unwrap().coords, tz(&[6, 1, 5]));
    }

    #[test]
    fn commuting_swap() {
        let c = chamber("A3");
        let dw = DecoratedWord::new(word(&c, "132132"), tz(&[7, 8, 1, 2, 3, 4])).unwrap();
        let out = c.apply_move(&dw, 0, 2).unwrap();
        assert_eq!(out.word, word(&c, "312132"));
        assert_eq!(out.coords, tz(&[8, 7, 1, 2, 3, 4]));
        assert!(matches!(
            c.apply_move(&dw, 1, 2),
            Err(ChamberError::InvalidMove { .. })
        ));
        assert!(matches!(
            c.apply_move(&dw, 0, 3),
            Err(ChamberError::InvalidMove { .. })
        ));
    }

    #[test]
    fn transition_lambda_rho_in_a2() {
        let c = chamber("A2");
        let dw = c.decorate(word(&c, "121"), tz(&[0, 1, 2])).unwrap();
        let out = c.transition(&dw, &word(&c, "212")).unwrap();
        assert_eq!(out.coords, tz(&[3, 0, 1]));
        assert_eq!(c.transition(&dw, &dw.word).unwrap(), dw);

        let cp = c.canonical(&out).unwrap();
        assert_eq!(cp.coords, tz(&[0, 1, 2]));
        assert_eq!(c.lambda(&cp, 0).unwrap(), TropInt(0));
        assert_eq!(c.lambda(&cp, 1).unwrap(), TropInt(3));
        assert_eq!(c.rho(&cp, 0).unwrap(), TropInt(2));
    }

    #[test]
    fn rejects_non_longest_words() {
        let c = chamber("A2");
        assert!(c.decorate(word(&c, "112"), tz(&[0, 0, 0])).is_err());
        assert!(matches!(
            c.decorate(word(&c, "121"), tz(&[0, 0])),
            Err(ChamberError::LengthMismatch { .. })
        ));
        assert_eq!(
            Chamber::new(&builtin("B:n=2").unwrap().0).unwrap_err(),
            ChamberError::NotSimplyLaced
        );
    }

    #[test]
    fn symbolic_round_trip_in_a3() {
        let c = chamber("A3");
        let vars = Vars::new(["x1", "x2", "x3", "x4", "x5", "x6"]);
        let dw = c.decorate(word(&c, "121321"), vars.generators()).unwrap();
        let graph = c
            .group()
            .longest_word_graph(crate::weyl::DEFAULT_WORD_CAP)
            .unwrap();
        for target in graph.vertices() {
            let there = c.transition(&dw, target).unwrap();
            let back = c.transition(&there, &dw.word).unwrap();
            assert_eq!(back, dw);
        }
    }

    #[test]
    fn sigma_relabels_letters() {
        let (d, s) = builtin("Dstyle:n=2").unwrap();
        let s = s.unwrap();
        let c = Chamber::new(&d).unwrap();
        let dw = DecoratedWord::new(word(&c, "22'12'21"), tz(&[1, 2, 3, 4, 5, 6])).unwrap();
        let moved = dw.sigma_action(&s);
        assert_eq!(moved.word, word(&c, "2'2122'1"));
        assert_eq!(moved.sigma_action(&s), dw);
    }

    #[test]
    fn sigma_fixed_detection() {
        let (d, s) = builtin("Dstyle:n=2").unwrap();
        let s = s.unwrap();
        let c = Chamber::new(&d).unwrap();
        let dw = c
            .decorate(word(&c, "22'12'21"), tz(&[1, 2, 1, 1, 1, 1]))
            .unwrap();
        let cp = c.canonical(&dw).unwrap();
        assert!(!c.is_sigma_fixed(&cp, &s).unwrap());
        assert!(c
            .is_sigma_fixed(&cp, &DiagramAutomorphism::identity(&d))
            .unwrap());
        let fixed = c
            .decorate(word(&c, "22'12'21"), tz(&[1, 1, 1, 1, 1, 1]))
            .unwrap();
        assert!(c.is_sigma_fixed(&c.canonical(&fixed).unwrap(), &s).unwrap());
    }

    #[test]
    fn json_form() {
        let c = chamber("A2");
        let dw = DecoratedWord::new(
            word(&c, "121"),
            vec![
                SemifieldValue::TropZ(TropInt(0)),
                SemifieldValue::TropZ(TropInt(1)),
                SemifieldValue::TropZ(TropInt(2)),
            ],
        )
        .unwrap();
        assert_eq!(
            dw.to_json(c.datum()),
            serde_json::json!([{"i": "1", "c": 0}, {"i": "2", "c": 1}, {"i": "1", "c": 2}])
        );
        assert_eq!(dw.display(c.datum()).to_string(), "1^{0}2^{1}1^{2}");
    }

    #[test]
    fn symbolic_lambda_independent_of_word() {
        let c = chamber("A3");
        let vars = Vars::new(["x1", "x2", "x3", "x4", "x5", "x6"]);
        let dw = c.decorate(word(&c, "121321"), vars.generators()).unwrap();
        let cp = c.canonical(&dw).unwrap();
        let graph = c
            .group()
            .longest_word_graph(crate::weyl::DEFAULT_WORD_CAP)
            .unwrap();
        for i in 0..3 {
            let starts: Vec<&Word> = graph
                .vertices()
                .iter()
                .filter(|w| w.first() == Some(i))
                .collect();
            let ends: Vec<&Word> = graph
                .vertices()
                .iter()
                .filter(|w| w.last() == Some(i))
                .collect();
            let l0: SymRat = c.lambda_via(&cp, starts[0]).unwrap();
            let r0: SymRat = c.rho_via(&cp, ends[0]).unwrap();
            for w in starts {
                assert_eq!(c.lambda_via(&cp, w).unwrap(), l0);
            }
            for w in ends {
                assert_eq!(c.rho_via(&cp, w).unwrap(), r0);
            }
        }
    }

    proptest! {
        #[test]
        fn moves_are_involutions(x in -50i64..50, y in -50i64..50, z in -50i64..50) {
            let c = chamber("A2");
            let dw = DecoratedWord::new(word(&c, "121"), tz(&[x, y, z])).unwrap();
            let once = c.apply_move(&dw, 0, 3).unwrap();
            prop_assert_eq!(c.apply_move(&once, 0, 3).unwrap(), dw);
        }

        #[test]
        fn tropical_three_move_is_min_plus(x in -1000i64..1000, y in -1000i64..1000, z in -1000i64..1000) {
            let c = chamber("A2");
            let dw = DecoratedWord::new(word(&c, "121"), tz(&[x, y, z])).unwrap();
            let out = c.apply_move(&dw, 0, 3).unwrap();
            let m = x.min(z);
            prop_assert_eq!(out.coords, tz(&[y + z - m, m, x + y - m]));
        }

        #[test]
        fn tropnat_never_underflows(coords in proptest::collection::vec(0u64..30, 6)) {
            let c = chamber("A3");
            let coords: Vec<TropNat> = coords.into_iter().map(TropNat).collect();
            let dw = c.decorate(word(&c, "121321"), coords).unwrap();
            let graph = c.group().longest_word_graph(crate::weyl::DEFAULT_WORD_CAP).unwrap();
            for target in graph.vertices() {
                prop_assert!(c.transition(&dw, target).is_ok());
            }
        }

        #[test]
        fn sigma_commutes_with_transition(coords in proptest::collection::vec(-9i64..10, 6)) {
            let (d, s) = builtin("Dstyle:n=2").unwrap();
            let s = s.unwrap();
            let c = Chamber::new(&d).unwrap();
            let dw = c.decorate(word(&c, "22'12'21"), tz(&coords)).unwrap();
            let graph = c.group().longest_word_graph(crate::weyl::DEFAULT_WORD_CAP).unwrap();
            let target = graph.vertices().last().unwrap().clone();
            let lhs = c.transition(&dw, &target).unwrap().sigma_action(&s);
            let sigma_target = Word(target.0.iter().map(|&i| s.apply(i)).collect());
            let rhs = c.transition(&dw.sigma_action(&s), &sigma_target).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
