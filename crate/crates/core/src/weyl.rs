//! Weyl group elements as integer matrices on the simple-root basis, the
//! longest element, and the braid-move graph on its reduced words.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::{self, Write as _};

use thiserror::Error;

use crate::cartan::{normalize_label, CartanDatum, CartanError};

/// Words above this many vertices are not enumerated unless the caller
/// raises the cap.
pub const DEFAULT_WORD_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeylError {
    #[error(transparent)]
    Cartan(#[from] CartanError),
    #[error("more than {0} reduced words")]
    CapExceeded(usize),
    #[error("cannot parse word {0:?}")]
    BadWord(String),
    #[error("word {0} is not a reduced word for the longest element")]
    NotReducedForLongest(String),
    #[error("orbit {0:?} is neither commuting nor a single joined pair")]
    UnsupportedOrbit(Vec<String>),
    #[error("reduced word graph is not connected")]
    Disconnected,
}

impl WeylError {
    pub fn kind(&self) -> &'static str {
        match self {
            WeylError::Cartan(e) => e.kind(),
            WeylError::CapExceeded(_) => "cap_exceeded",
            WeylError::BadWord(_) => "bad_word",
            WeylError::NotReducedForLongest(_) => "not_reduced",
            WeylError::UnsupportedOrbit(_) => "unsupported_orbit",
            WeylError::Disconnected => "disconnected",
        }
    }
}

/// A sequence of node indices into a [`CartanDatum`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    /// Parses labels separated by commas or spaces, or run together; in the
    /// latter case the longest matching label wins at each step.
    pub fn parse(datum: &CartanDatum, text: &str) -> Result<Word, WeylError> {
        let text = normalize_label(text);
        let mut letters = Vec::new();
        for chunk in text.split(|c: char| c == ',' || c.is_whitespace()) {
            let mut rest = chunk;
            while !rest.is_empty() {
                let best = (0..datum.rank())
                    .filter(|&i| rest.starts_with(datum.label(i)))
                    .max_by_key(|&i| datum.label(i).len())
                    .ok_or_else(|| WeylError::BadWord(text.clone()))?;
                letters.push(best);
                rest = &rest[datum.label(best).len()..];
            }
        }
        Ok(Word(letters))
    }

    /// Word from a list of labels.
    pub fn from_labels<S: AsRef<str>>(
        datum: &CartanDatum,
        labels: &[S],
    ) -> Result<Word, WeylError> {
        labels
            .iter()
            .map(|l| datum.index_of(l.as_ref()).map_err(WeylError::from))
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }

    pub fn labels(&self, datum: &CartanDatum) -> Vec<String> {
        self.0.iter().map(|&i| datum.label(i).to_string()).collect()
    }

    pub fn display<'a>(&'a self, datum: &'a CartanDatum) -> WordDisplay<'a> {
        WordDisplay { word: self, datum }
    }
}

/// Renders a word by concatenating labels when every label is a single
/// character plus optional primes, and with spaces otherwise.
pub struct WordDisplay<'a> {
    word: &'a Word,
    datum: &'a CartanDatum,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self
            .datum
            .labels()
            .iter()
            .all(|l| l.trim_end_matches('\'').chars().count() == 1);
        let sep = if compact { "" } else { " " };
        f.write_str(&self.word.labels(self.datum).join(sep))
    }
}

/// An element of W, stored by its action on the simple roots: column `j`
/// holds the coordinates of `w(α_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    matrix: Vec<Vec<i64>>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let mut matrix = vec![vec![0; rank]; rank];
        for (i, row) in matrix.iter_mut().enumerate() {
            row[i] = 1;
        }
        WeylElement { matrix }
    }

    pub fn simple_reflection(datum: &CartanDatum, i: usize) -> Self {
        let mut w = WeylElement::identity(datum.rank());
        for j in 0..datum.rank() {
            w.matrix[i][j] -= datum.cartan_integer(i, j);
        }
        w
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        self.matrix
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn compose(&self, rhs: &WeylElement) -> WeylElement {
        let n = self.rank();
        let mut matrix = vec![vec![0; n]; n];
        for i in 0..n {
            for k in 0..n {
                let a = self.matrix[i][k];
                if a != 0 {
                    for j in 0..n {
                        matrix[i][j] += a * rhs.matrix[k][j];
                    }
                }
            }
        }
        WeylElement { matrix }
    }

    /// `w · s_i`, computed on columns: `(w s_i)(α_j) = w(α_j) - a_ij w(α_i)`.
    pub fn right_mul_simple(&self, datum: &CartanDatum, i: usize) -> WeylElement {
        let mut out = self.clone();
        for j in 0..self.rank() {
            let a = datum.cartan_integer(i, j);
            if a != 0 {
                for r in 0..self.rank() {
                    out.matrix[r][j] -= a * self.matrix[r][i];
                }
            }
        }
        out
    }

    pub fn left_mul_simple(&self, datum: &CartanDatum, i: usize) -> WeylElement {
        WeylElement::simple_reflection(datum, i).compose(self)
    }

    pub fn from_word(datum: &CartanDatum, word: &Word) -> WeylElement {
        word.0
            .iter()
            .fold(WeylElement::identity(datum.rank()), |w, &i| {
                w.right_mul_simple(datum, i)
            })
    }

    /// `l(w s_i) < l(w)` exactly when `w(α_i)` is a negative root.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.matrix.iter().any(|row| row[i] < 0)
    }
}

fn is_negative(v: &[i64]) -> bool {
    v.iter().any(|&x| x < 0)
}

/// Root data for one Cartan datum.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    datum: CartanDatum,
    positive_roots: Vec<Vec<i64>>,
    longest: WeylElement,
    longest_word: Word,
}

impl WeylGroup {
    pub fn new(datum: &CartanDatum) -> Self {
        let n = datum.rank();
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        // s_i permutes the positive roots other than α_i.
        while let Some(beta) = queue.pop_front() {
            for i in 0..n {
                let s = WeylElement::simple_reflection(datum, i).apply(&beta);
                if !is_negative(&s) && seen.insert(s.clone()) {
                    queue.push_back(s);
                }
            }
        }
        let mut positive_roots: Vec<Vec<i64>> = seen.into_iter().collect();
        positive_roots.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));

        let mut w = WeylElement::identity(n);
        let mut word = Vec::new();
        while let Some(i) = (0..n).find(|&i| !w.has_right_descent(i)) {
            w = w.right_mul_simple(datum, i);
            word.push(i);
        }
        WeylGroup {
            datum: datum.clone(),
            positive_roots,
            longest: w,
            longest_word: Word(word),
        }
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// Height of a root in simple-root coordinates.
    pub fn height(root: &[i64]) -> i64 {
        root.iter().sum()
    }

    pub fn longest(&self) -> &WeylElement {
        &self.longest
    }

    /// `N = l(w₀)`, the number of positive roots.
    pub fn longest_length(&self) -> usize {
        self.positive_roots.len()
    }

    /// The word found by greedy ascent while building `w₀`.
    pub fn greedy_longest_word(&self) -> &Word {
        &self.longest_word
    }

    pub fn length(&self, w: &WeylElement) -> usize {
        self.positive_roots
            .iter()
            .filter(|r| is_negative(&w.apply(r)))
            .count()
    }

    pub fn element(&self, word: &Word) -> WeylElement {
        WeylElement::from_word(&self.datum, word)
    }

    pub fn is_reduced(&self, word: &Word) -> bool {
        self.length(&self.element(word)) == word.len()
    }

    pub fn is_reduced_for_longest(&self, word: &Word) -> bool {
        word.len() == self.longest_length() && self.element(word) == self.longest
    }

    pub fn check_longest_word(&self, word: &Word) -> Result<(), WeylError> {
        if self.is_reduced_for_longest(word) {
            Ok(())
        } else {
            Err(WeylError::NotReducedForLongest(
                word.display(&self.datum).to_string(),
            ))
        }
    }

    /// A reduced word for `w`, built by peeling off right descents.
    pub fn reduced_word(&self, w: &WeylElement) -> Word {
        let mut w = w.clone();
        let mut rev = Vec::new();
        while let Some(i) = (0..self.rank()).find(|&i| w.has_right_descent(i)) {
            w = w.right_mul_simple(&self.datum, i);
            rev.push(i);
        }
        rev.reverse();
        Word(rev)
    }

    /// The lexicographically least reduced word for `w`: always take the
    /// smallest left descent.
    pub fn lex_least_word(&self, w: &WeylElement) -> Word {
        let mut w = w.clone();
        let mut out = Vec::new();
        loop {
            let next = (0..self.rank()).find(|&i| {
                let s = w.left_mul_simple(&self.datum, i);
                self.length(&s) < self.length(&w)
            });
            match next {
                Some(i) => {
                    w = w.left_mul_simple(&self.datum, i);
                    out.push(i);
                }
                None => return Word(out),
            }
        }
    }

    /// A reduced word for `w₀` with first letter `i`.
    pub fn longest_word_starting_with(&self, i: usize) -> Word {
        let rest = self.longest.left_mul_simple(&self.datum, i);
        let mut word = vec![i];
        word.extend(self.reduced_word(&rest).0);
        Word(word)
    }

    /// A reduced word for `w₀` with last letter `i`.
    pub fn longest_word_ending_with(&self, i: usize) -> Word {
        let rest = self.longest.right_mul_simple(&self.datum, i);
        let mut word = self.reduced_word(&rest).0;
        word.push(i);
        Word(word)
    }

    /// All reduced words for `w`, sorted lexicographically.
    pub fn reduced_words(&self, w: &WeylElement, cap: usize) -> Result<Vec<Word>, WeylError> {
        let mut out = Vec::new();
        let mut suffix = Vec::new();
        self.collect_words(w, &mut suffix, &mut out, cap)?;
        out.sort();
        Ok(out)
    }

    fn collect_words(
        &self,
        w: &WeylElement,
        suffix: &mut Vec<usize>,
        out: &mut Vec<Word>,
        cap: usize,
    ) -> Result<(), WeylError> {
        let descents: Vec<usize> = (0..self.rank())
            .filter(|&i| w.has_right_descent(i))
            .collect();
        if descents.is_empty() {
            if out.len() >= cap {
                return Err(WeylError::CapExceeded(cap));
            }
            out.push(Word(suffix.iter().rev().copied().collect()));
            return Ok(());
        }
        for i in descents {
            suffix.push(i);
            self.collect_words(&w.right_mul_simple(&self.datum, i), suffix, out, cap)?;
            suffix.pop();
        }
        Ok(())
    }

    /// All reduced words for `w` with their braid edges.
    pub fn enumerate_reduced_words(
        &self,
        w: &WeylElement,
        cap: usize,
    ) -> Result<WordGraph, WeylError> {
        let vertices = self.reduced_words(w, cap)?;
        let index: HashMap<Word, usize> = vertices
            .iter()
            .enumerate()
            .map(|(k, v)| (v.clone(), k))
            .collect();
        let mut edges = Vec::new();
        for (a, v) in vertices.iter().enumerate() {
            for (nb, k, r) in braid_neighbors(&self.datum, v) {
                let b = index[&nb];
                if a < b {
                    edges.push(WordEdge {
                        a,
                        b,
                        position: k,
                        r,
                    });
                }
            }
        }
        let graph = WordGraph {
            vertices,
            index,
            edges,
        };
        if !graph.is_connected() {
            return Err(WeylError::Disconnected);
        }
        Ok(graph)
    }

    pub fn longest_word_graph(&self, cap: usize) -> Result<WordGraph, WeylError> {
        self.enumerate_reduced_words(&self.longest, cap)
    }

    /// Breadth-first walk over braid moves from `seed`, stopping after
    /// `limit` words. Useful when the full word set is large.
    pub fn explore(&self, seed: &Word, limit: usize) -> Vec<Word> {
        let mut seen: HashMap<Word, ()> = HashMap::new();
        let mut order = Vec::new();
        let mut queue = VecDeque::from([seed.clone()]);
        seen.insert(seed.clone(), ());
        while let Some(w) = queue.pop_front() {
            order.push(w.clone());
            if order.len() >= limit {
                break;
            }
            for (nb, _, _) in braid_neighbors(&self.datum, &w) {
                if seen.insert(nb.clone(), ()).is_none() {
                    queue.push_back(nb);
                }
            }
        }
        order
    }

    /// `w_η`, its length and the canonical reduced word: `(i)` for a single
    /// node, the sorted orbit when its nodes commute, and `(i, i', i)` for a
    /// joined pair.
    pub fn orbit_longest(&self, orbit: &[usize]) -> Result<(WeylElement, usize, Word), WeylError> {
        let mut nodes = orbit.to_vec();
        nodes.sort_unstable();
        let commuting = nodes.iter().all(|&i| {
            nodes
                .iter()
                .all(|&j| i == j || self.datum.pairing(i, j) == 0)
        });
        let word = if commuting {
            Word(nodes.clone())
        } else if nodes.len() == 2 && self.datum.h_value(nodes[0], nodes[1])? == 3 {
            Word(vec![nodes[0], nodes[1], nodes[0]])
        } else {
            return Err(WeylError::UnsupportedOrbit(
                nodes
                    .iter()
                    .map(|&i| self.datum.label(i).to_string())
                    .collect(),
            ));
        };
        let w = self.element(&word);
        debug_assert!(nodes.iter().all(|&i| w.has_right_descent(i)));
        Ok((w, word.len(), word))
    }
}

/// All words obtained from `word` by one braid move, as `(word, k, r)` with
/// `k` the 0-based start of the segment. Sorted lexicographically.
pub fn braid_neighbors(datum: &CartanDatum, word: &Word) -> Vec<(Word, usize, usize)> {
    let w = &word.0;
    let mut out = Vec::new();
    for k in 0..w.len().saturating_sub(1) {
        let (p, q) = (w[k], w[k + 1]);
        if p == q {
            continue;
        }
        let r = match datum.h_value(p, q) {
            Ok(r) => r,
            Err(_) => continue,
        };
        if k + r > w.len() {
            continue;
        }
        let alternating = (0..r).all(|t| w[k + t] == if t % 2 == 0 { p } else { q });
        if !alternating {
            continue;
        }
        let mut next = w.clone();
        for t in 0..r {
            next[k + t] = if t % 2 == 0 { q } else { p };
        }
        out.push((Word(next), k, r));
    }
    out.sort();
    out
}

/// Checks that `a` and `b` differ by one braid move at `k` of length `r`.
pub fn is_braid_edge(datum: &CartanDatum, a: &Word, b: &Word) -> Option<(usize, usize)> {
    braid_neighbors(datum, a)
        .into_iter()
        .find(|(w, _, _)| w == b)
        .map(|(_, k, r)| (k, r))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WordEdge {
    pub a: usize,
    pub b: usize,
    /// 0-based start of the braid segment.
    pub position: usize,
    pub r: usize,
}

#[derive(Clone, Debug)]
pub struct WordGraph {
    vertices: Vec<Word>,
    index: HashMap<Word, usize>,
    edges: Vec<WordEdge>,
}

impl WordGraph {
    pub fn vertices(&self) -> &[Word] {
        &self.vertices
    }

    pub fn edges(&self) -> &[WordEdge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for e in &self.edges {
            adj[e.a].push(e.b);
            adj[e.b].push(e.a);
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &u in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Graphviz rendering; edge labels are `(k,r)` with `k` 1-based.
    pub fn to_dot(&self, datum: &CartanDatum) -> String {
        let mut s = String::from("graph words {\n");
        for v in &self.vertices {
            let _ = writeln!(s, "  \"{}\";", v.display(datum));
        }
        for e in &self.edges {
            let _ = writeln!(
                s,
                "  \"{}\" -- \"{}\" [label=\"({},{})\"];",
                self.vertices[e.a].display(datum),
                self.vertices[e.b].display(datum),
                e.position + 1,
                e.r
            );
        }
        s.push_str("}\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{builtin, fold};

    fn group(name: &str) -> WeylGroup {
        WeylGroup::new(&builtin(name).unwrap().0)
    }

    fn w(g: &WeylGroup, s: &str) -> Word {
        Word::parse(g.datum(), s).unwrap()
    }

    #[test]
    fn longest_lengths() {
        assert_eq!(group("A2").longest_length(), 3);
        assert_eq!(group("A4").longest_length(), 10);
        assert_eq!(group("B:n=2").longest_length(), 4);
        assert_eq!(group("D4+triality").longest_length(), 12);
        let g = group("A3");
        assert_eq!(g.length(g.longest()), 6);
        assert!(g.is_reduced_for_longest(g.greedy_longest_word()));
    }

    #[test]
    fn reflections_are_involutions() {
        let (d, _) = builtin("B:n=3").unwrap();
        for i in 0..d.rank() {
            let s = WeylElement::simple_reflection(&d, i);
            assert_eq!(s.compose(&s), WeylElement::identity(d.rank()));
        }
    }

    #[test]
    fn words_starting_and_ending() {
        let g = group("A2");
        assert_eq!(g.longest_word_starting_with(0), w(&g, "121"));
        assert_eq!(g.longest_word_starting_with(1), w(&g, "212"));
        let b = group("B:n=2");
        assert_eq!(b.longest_word_starting_with(0), w(&b, "1212"));
        let a4 = group("A4");
        for i in 0..4 {
            let s = a4.longest_word_starting_with(i);
            assert_eq!(s.first(), Some(i));
            assert!(a4.is_reduced_for_longest(&s));
            let e = a4.longest_word_ending_with(i);
            assert_eq!(e.last(), Some(i));
            assert!(a4.is_reduced_for_longest(&e));
        }
    }

    #[test]
    fn enumerate_small() {
        let g = group("A2");
        let graph = g.longest_word_graph(DEFAULT_WORD_CAP).unwrap();
        assert_eq!(graph.vertices(), &[w(&g, "121"), w(&g, "212")]);
        assert_eq!(graph.edges().len(), 1);

        let b = group("B:n=2");
        let graph = b.longest_word_graph(DEFAULT_WORD_CAP).unwrap();
        assert_eq!(graph.len(), 2);
        assert_eq!(graph.edges()[0].r, 4);
        assert_eq!(graph.edges()[0].position, 0);

        assert_eq!(
            group("A4")
                .longest_word_graph(DEFAULT_WORD_CAP)
                .unwrap()
                .len(),
            768
        );
        assert!(matches!(
            group("A3").longest_word_graph(3),
            Err(WeylError::CapExceeded(3))
        ));
    }

    #[test]
    fn lex_least_is_first_enumerated() {
        for name in ["A2", "A3", "A4", "Dstyle:n=2", "B:n=2"] {
            let g = group(name);
            let words = g.reduced_words(g.longest(), DEFAULT_WORD_CAP).unwrap();
            assert_eq!(words[0], g.lex_least_word(g.longest()));
        }
    }

    #[test]
    fn neighbors_in_a3() {
        let g = group("A3");
        let nbs = braid_neighbors(g.datum(), &w(&g, "121321"));
        assert!(nbs.contains(&(w(&g, "212321"), 0, 3)));
        for (nb, _, _) in nbs {
            assert_eq!(g.element(&nb), g.element(&w(&g, "121321")));
        }
        let b = group("B:n=2");
        assert_eq!(
            braid_neighbors(b.datum(), &w(&b, "1212")),
            vec![(w(&b, "2121"), 0, 4)]
        );
    }

    #[test]
    fn parse_primed_labels() {
        let g = group("Dstyle:n=2");
        let word = w(&g, "22'12'21");
        assert_eq!(word, Word(vec![1, 2, 0, 2, 1, 0]));
        assert_eq!(word.display(g.datum()).to_string(), "22'12'21");
        assert_eq!(w(&g, "2, 2', 1, 2', 2, 1"), word);
        assert!(Word::parse(g.datum(), "23").is_err());
        assert!(g.is_reduced_for_longest(&word));
    }

    #[test]
    fn orbit_words() {
        let (d, s) = builtin("Dstyle:n=2").unwrap();
        let g = WeylGroup::new(&d);
        let f = fold(&d, s.as_ref().unwrap()).unwrap();
        let (_, n, word) = g.orbit_longest(&f.orbits[1]).unwrap();
        assert_eq!((n, word), (2, Word(vec![1, 2])));

        let (d, s) = builtin("A4+flip").unwrap();
        let g = WeylGroup::new(&d);
        let f = fold(&d, s.as_ref().unwrap()).unwrap();
        let (_, n, word) = g.orbit_longest(&f.orbits[1]).unwrap();
        assert_eq!((n, word), (3, Word(vec![1, 2, 1])));
        let (_, n, word) = g.orbit_longest(&[2]).unwrap();
        assert_eq!((n, word), (1, Word(vec![2])));
        assert!(g.orbit_longest(&[0, 1, 2]).is_err());
    }

    #[test]
    fn folded_longest_element_is_product_of_orbit_elements() {
        let (d, s) = builtin("Dstyle:n=2").unwrap();
        let g = WeylGroup::new(&d);
        let f = fold(&d, s.as_ref().unwrap()).unwrap();
        let w1 = g.orbit_longest(&f.orbits[0]).unwrap().0;
        let w2 = g.orbit_longest(&f.orbits[1]).unwrap().0;
        let prod = w1.compose(&w2).compose(&w1).compose(&w2);
        assert_eq!(&prod, g.longest());
    }

    #[test]
    fn dot_export() {
        let g = group("A2");
        let dot = g
            .longest_word_graph(DEFAULT_WORD_CAP)
            .unwrap()
            .to_dot(g.datum());
        assert!(dot.contains("\"121\" -- \"212\" [label=\"(1,3)\"]"));
    }

    #[test]
    fn explore_matches_enumeration() {
        let g = group("A4");
        let seed = g.greedy_longest_word().clone();
        assert_eq!(g.explore(&seed, usize::MAX).len(), 768);
        assert_eq!(g.explore(&seed, 10).len(), 10);
    }
}
