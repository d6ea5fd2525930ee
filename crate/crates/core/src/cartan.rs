//! Cartan data, diagram automorphisms and folding.
//!
//! A Cartan datum is a finite set of node labels with a symmetric positive
//! definite integer pairing `i·j`. Folding a simply laced datum along a
//! pairing-preserving permutation σ gives a datum on the σ-orbits.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CartanError {
    #[error("a Cartan datum needs at least one node")]
    Empty,
    #[error("pairing matrix is not square over the {0} labels")]
    NotSquare(usize),
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("pairing is not symmetric at ({0}, {1})")]
    Asymmetric(String, String),
    #[error("diagonal entry {1} at {0} is not a positive even integer")]
    BadDiagonal(String, i64),
    #[error("off-diagonal entry {2} at ({0}, {1}) is positive")]
    PositiveOffDiagonal(String, String, i64),
    #[error("2(i·j)/(i·i) is not an integer at ({0}, {1})")]
    NonIntegralCartan(String, String),
    #[error("pairing is not positive definite (leading minor of order {0} is {1})")]
    NotPositiveDefinite(usize, String),
    #[error("h(i, j) needs two distinct nodes, got {0} twice")]
    SameNode(String),
    #[error("pair ({0}, {1}) has Cartan product {2}, outside finite type")]
    InfiniteBond(String, String, i64),
    #[error("sigma is not a permutation of the labels")]
    NotAPermutation,
    #[error("sigma does not preserve the pairing at ({0}, {1})")]
    NotPairingPreserving(String, String),
    #[error("folding needs a simply laced datum")]
    NotSimplyLaced,
    #[error("orbits with joined nodes (delta = 2) require an irreducible datum")]
    ReducibleWithJoinedOrbit,
    #[error("folded pairing entry at ({0}, {1}) is not an integer")]
    NonIntegralFolding(String, String),
    #[error("folded pairing is not a Cartan datum: {0}")]
    InvalidFolding(Box<CartanError>),
    #[error("unknown builtin datum {0:?}")]
    UnknownBuiltin(String),
    #[error("invalid size in builtin {0:?}")]
    InvalidSize(String),
    #[error("malformed datum file: {0}")]
    Json(String),
}

impl CartanError {
    /// Stable machine-readable name of the error kind.
    pub fn kind(&self) -> &'static str {
        match self {
            CartanError::Empty => "empty",
            CartanError::NotSquare(_) => "not_square",
            CartanError::DuplicateLabel(_) => "duplicate_label",
            CartanError::UnknownLabel(_) => "unknown_label",
            CartanError::Asymmetric(..) => "asymmetric",
            CartanError::BadDiagonal(..) => "bad_diagonal",
            CartanError::PositiveOffDiagonal(..) => "positive_off_diagonal",
            CartanError::NonIntegralCartan(..) => "non_integral_cartan",
            CartanError::NotPositiveDefinite(..) => "not_positive_definite",
            CartanError::SameNode(_) => "same_node",
            CartanError::InfiniteBond(..) => "infinite_bond",
            CartanError::NotAPermutation => "not_a_permutation",
            CartanError::NotPairingPreserving(..) => "not_pairing_preserving",
            CartanError::NotSimplyLaced => "not_simply_laced",
            CartanError::ReducibleWithJoinedOrbit => "reducible_with_joined_orbit",
            CartanError::NonIntegralFolding(..) => "non_integral_folding",
            CartanError::InvalidFolding(_) => "invalid_folding",
            CartanError::UnknownBuiltin(_) => "unknown_builtin",
            CartanError::InvalidSize(_) => "invalid_size",
            CartanError::Json(_) => "datum_format",
        }
    }
}

/// Accepts the typographic prime as an alias of the ASCII apostrophe.
pub fn normalize_label(label: &str) -> String {
    label.trim().replace('′', "'")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanDatum {
    labels: Vec<String>,
    pairing: Vec<Vec<i64>>,
    simply_laced: bool,
    irreducible: bool,
}

impl CartanDatum {
    /// Validates a labelled pairing matrix.
    pub fn validate<S: AsRef<str>>(
        labels: &[S],
        pairing: Vec<Vec<i64>>,
    ) -> Result<Self, CartanError> {
        let labels: Vec<String> = labels.iter().map(|l| normalize_label(l.as_ref())).collect();
        let n = labels.len();
        if n == 0 {
            return Err(CartanError::Empty);
        }
        for (k, l) in labels.iter().enumerate() {
            if labels[..k].contains(l) {
                return Err(CartanError::DuplicateLabel(l.clone()));
            }
        }
        if pairing.len() != n || pairing.iter().any(|row| row.len() != n) {
            return Err(CartanError::NotSquare(n));
        }
        for i in 0..n {
            for j in 0..n {
                if pairing[i][j] != pairing[j][i] {
                    return Err(CartanError::Asymmetric(
                        labels[i].clone(),
                        labels[j].clone(),
                    ));
                }
            }
        }
        for i in 0..n {
            let d = pairing[i][i];
            if d <= 0 || d % 2 != 0 {
                return Err(CartanError::BadDiagonal(labels[i].clone(), d));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let v = pairing[i][j];
                if v > 0 {
                    return Err(CartanError::PositiveOffDiagonal(
                        labels[i].clone(),
                        labels[j].clone(),
                        v,
                    ));
                }
                if (2 * v) % pairing[i][i] != 0 {
                    return Err(CartanError::NonIntegralCartan(
                        labels[i].clone(),
                        labels[j].clone(),
                    ));
                }
            }
        }
        check_positive_definite(&pairing)?;

        let simply_laced = (0..n).all(|i| {
            pairing[i][i] == 2
                && (0..n).all(|j| i == j || pairing[i][j] == 0 || pairing[i][j] == -1)
        });
        let irreducible = is_connected(&pairing);
        let datum = CartanDatum {
            labels,
            pairing,
            simply_laced,
            irreducible,
        };
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    datum.h_value(i, j)?;
                }
            }
        }
        Ok(datum)
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize, CartanError> {
        let label = normalize_label(label);
        self.labels
            .iter()
            .position(|l| *l == label)
            .ok_or(CartanError::UnknownLabel(label))
    }

    pub fn pairing(&self, i: usize, j: usize) -> i64 {
        self.pairing[i][j]
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.pairing
    }

    /// `2(i·j)/(i·i)`.
    pub fn cartan_integer(&self, i: usize, j: usize) -> i64 {
        2 * self.pairing[i][j] / self.pairing[i][i]
    }

    pub fn is_simply_laced(&self) -> bool {
        self.simply_laced
    }

    pub fn is_irreducible(&self) -> bool {
        self.irreducible
    }

    /// Braid length between two distinct nodes: 2, 3, 4 or 6 according to
    /// whether the product of the two Cartan integers is 0, 1, 2 or 3.
    pub fn h_value(&self, i: usize, j: usize) -> Result<usize, CartanError> {
        if i == j {
            return Err(CartanError::SameNode(self.labels[i].clone()));
        }
        match self.cartan_integer(i, j) * self.cartan_integer(j, i) {
            0 => Ok(2),
            1 => Ok(3),
            2 => Ok(4),
            3 => Ok(6),
            p => Err(CartanError::InfiniteBond(
                self.labels[i].clone(),
                self.labels[j].clone(),
                p,
            )),
        }
    }

    /// Same as [`h_value`](Self::h_value) but by label.
    pub fn h_value_by_label(&self, i: &str, j: &str) -> Result<usize, CartanError> {
        self.h_value(self.index_of(i)?, self.index_of(j)?)
    }

    pub fn to_file(&self, sigma: Option<&DiagramAutomorphism>) -> DatumFile {
        DatumFile {
            labels: self.labels.clone(),
            pairing: self.pairing.clone(),
            sigma: sigma.map(|s| {
                (0..self.rank())
                    .map(|i| (self.labels[i].clone(), self.labels[s.apply(i)].clone()))
                    .collect()
            }),
        }
    }
}

impl fmt::Display for CartanDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "labels: {}", self.labels.join(" "))?;
        for row in &self.pairing {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>3}")).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Leading principal minors by fraction-free elimination: after step `k`
/// the pivot equals the minor of order `k + 1`.
fn check_positive_definite(m: &[Vec<i64>]) -> Result<(), CartanError> {
    let n = m.len();
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let mut prev = BigInt::from(1);
    for k in 0..n {
        let pivot = a[k][k].clone();
        if !pivot.is_positive() {
            return Err(CartanError::NotPositiveDefinite(k + 1, pivot.to_string()));
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &pivot - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = pivot;
    }
    Ok(())
}

fn is_connected(m: &[Vec<i64>]) -> bool {
    let n = m.len();
    if n == 0 {
        return false;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if !seen[j] && !m[i][j].is_zero() {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// A pairing-preserving permutation of the nodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramAutomorphism {
    permutation: Vec<usize>,
    order: usize,
}

impl DiagramAutomorphism {
    pub fn new(datum: &CartanDatum, permutation: Vec<usize>) -> Result<Self, CartanError> {
        let n = datum.rank();
        if permutation.len() != n {
            return Err(CartanError::NotAPermutation);
        }
        let mut hit = vec![false; n];
        for &p in &permutation {
            if p >= n || hit[p] {
                return Err(CartanError::NotAPermutation);
            }
            hit[p] = true;
        }
        for i in 0..n {
            for j in 0..n {
                if datum.pairing(permutation[i], permutation[j]) != datum.pairing(i, j) {
                    return Err(CartanError::NotPairingPreserving(
                        datum.label(i).to_string(),
                        datum.label(j).to_string(),
                    ));
                }
            }
        }
        let order = cycles(&permutation)
            .iter()
            .fold(1, |acc, c| lcm(acc, c.len()));
        Ok(DiagramAutomorphism { permutation, order })
    }

    pub fn identity(datum: &CartanDatum) -> Self {
        DiagramAutomorphism {
            permutation: (0..datum.rank()).collect(),
            order: 1,
        }
    }

    /// Builds σ from a label → label map; unmapped labels are fixed.
    pub fn from_label_map(
        datum: &CartanDatum,
        map: &BTreeMap<String, String>,
    ) -> Result<Self, CartanError> {
        let mut perm: Vec<usize> = (0..datum.rank()).collect();
        for (from, to) in map {
            perm[datum.index_of(from)?] = datum.index_of(to)?;
        }
        DiagramAutomorphism::new(datum, perm)
    }

    pub fn apply(&self, i: usize) -> usize {
        self.permutation[i]
    }

    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_identity(&self) -> bool {
        self.order == 1
    }

    /// Orbits, each sorted ascending, ordered by their minimum.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut cs = cycles(&self.permutation);
        for c in &mut cs {
            c.sort_unstable();
        }
        cs.sort();
        cs
    }
}

fn cycles(perm: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push(i);
            i = perm[i];
        }
        out.push(cycle);
    }
    out
}

fn lcm(a: usize, b: usize) -> usize {
    a / num_integer::gcd(a, b) * b
}

/// Result of folding `(I, ·)` along σ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoldedDatum {
    /// Source-node indices of each orbit, sorted; orbit `k` is node `k` of `folded`.
    pub orbits: Vec<Vec<usize>>,
    pub delta_eta: Vec<u8>,
    pub delta: u8,
    pub folded: CartanDatum,
}

impl FoldedDatum {
    /// Orbit index of a source node.
    pub fn orbit_of(&self, source: usize) -> usize {
        self.orbits
            .iter()
            .position(|o| o.contains(&source))
            .expect("every node lies in an orbit")
    }
}

pub fn fold(datum: &CartanDatum, sigma: &DiagramAutomorphism) -> Result<FoldedDatum, CartanError> {
    if !datum.is_simply_laced() {
        return Err(CartanError::NotSimplyLaced);
    }
    if sigma.permutation().len() != datum.rank() {
        return Err(CartanError::NotAPermutation);
    }
    for i in 0..datum.rank() {
        for j in 0..datum.rank() {
            if datum.pairing(sigma.apply(i), sigma.apply(j)) != datum.pairing(i, j) {
                return Err(CartanError::NotPairingPreserving(
                    datum.label(i).to_string(),
                    datum.label(j).to_string(),
                ));
            }
        }
    }
    let orbits = sigma.orbits();
    let delta_eta: Vec<u8> = orbits
        .iter()
        .map(|o| {
            let all_orthogonal = o
                .iter()
                .all(|&i| o.iter().all(|&j| i == j || datum.pairing(i, j) == 0));
            if all_orthogonal {
                1
            } else {
                2
            }
        })
        .collect();
    let delta = delta_eta.iter().copied().max().unwrap_or(1);
    if delta == 2 && !datum.is_irreducible() {
        return Err(CartanError::ReducibleWithJoinedOrbit);
    }

    let labels: Vec<String> = orbits
        .iter()
        .map(|o| datum.label(o[0]).to_string())
        .collect();
    let d = i64::from(delta);
    let m = orbits.len();
    let mut pairing = vec![vec![0i64; m]; m];
    for a in 0..m {
        for b in 0..m {
            let numer = if a == b {
                2 * i64::from(delta_eta[a]) * orbits[a].len() as i64
            } else {
                let joined = orbits[a]
                    .iter()
                    .flat_map(|&i| orbits[b].iter().map(move |&j| (i, j)))
                    .filter(|&(i, j)| datum.pairing(i, j) != 0)
                    .count() as i64;
                -i64::from(delta_eta[a]) * i64::from(delta_eta[b]) * joined
            };
            if numer % d != 0 {
                return Err(CartanError::NonIntegralFolding(
                    labels[a].clone(),
                    labels[b].clone(),
                ));
            }
            pairing[a][b] = numer / d;
        }
    }
    let folded = CartanDatum::validate(&labels, pairing)
        .map_err(|e| CartanError::InvalidFolding(Box::new(e)))?;
    Ok(FoldedDatum {
        orbits,
        delta_eta,
        delta,
        folded,
    })
}

/// On-disk datum format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatumFile {
    pub labels: Vec<String>,
    pub pairing: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma: Option<BTreeMap<String, String>>,
}

impl DatumFile {
    pub fn from_json(text: &str) -> Result<Self, CartanError> {
        serde_json::from_str(text).map_err(|e| CartanError::Json(e.to_string()))
    }

    pub fn into_datum(self) -> Result<(CartanDatum, Option<DiagramAutomorphism>), CartanError> {
        let datum = CartanDatum::validate(&self.labels, self.pairing)?;
        let sigma = match &self.sigma {
            Some(map) => Some(DiagramAutomorphism::from_label_map(&datum, map)?),
            None => None,
        };
        Ok((datum, sigma))
    }
}

fn path_matrix(n: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0; n]; n];
    for i in 0..n {
        m[i][i] = 2;
        if i + 1 < n {
            m[i][i + 1] = -1;
            m[i + 1][i] = -1;
        }
    }
    m
}

fn numbered(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

fn size_param(name: &str, text: &str) -> Result<usize, CartanError> {
    match text.parse::<usize>() {
        Ok(n) if n >= 1 => Ok(n),
        _ => Err(CartanError::InvalidSize(name.to_string())),
    }
}

/// Built-in data:
///
/// * `A<m>`: the path `1 - 2 - … - m`.
/// * `A<2n>+flip`: the same with `σ(i) = 2n + 1 - i`.
/// * `Dstyle:n=<n>`: nodes `1..n` and `n'` with `n-1` joined to both `n` and
///   `n'`, and σ swapping `n` and `n'`.
/// * `B:n=<n>`: nodes `1..n`, a path with `n·n = 4` and `(n-1)·n = -2`.
/// * `D4+triality`: centre `2`, outer nodes `1, 3, 4` cycled by σ.
pub fn builtin(name: &str) -> Result<(CartanDatum, Option<DiagramAutomorphism>), CartanError> {
    let name = name.trim();
    if let Some(rest) = name.strip_prefix("Dstyle:n=") {
        let n = size_param(name, rest)?;
        let mut labels = numbered(n);
        labels.push(format!("{n}'"));
        let mut m = path_matrix(n + 1);
        // The extra node n' hangs off n-1, not off n.
        m[n - 1][n] = 0;
        m[n][n - 1] = 0;
        if n >= 2 {
            m[n - 2][n] = -1;
            m[n][n - 2] = -1;
        }
        let datum = CartanDatum::validate(&labels, m)?;
        let mut perm: Vec<usize> = (0..=n).collect();
        perm.swap(n - 1, n);
        let sigma = DiagramAutomorphism::new(&datum, perm)?;
        return Ok((datum, Some(sigma)));
    }
    if let Some(rest) = name.strip_prefix("B:n=") {
        let n = size_param(name, rest)?;
        let mut m = path_matrix(n);
        m[n - 1][n - 1] = 4;
        if n >= 2 {
            m[n - 2][n - 1] = -2;
            m[n - 1][n - 2] = -2;
        }
        return Ok((CartanDatum::validate(&numbered(n), m)?, None));
    }
    if name == "D4+triality" {
        let labels = numbered(4);
        let mut m = vec![vec![0; 4]; 4];
        for i in 0..4 {
            m[i][i] = 2;
        }
        for outer in [0, 2, 3] {
            m[outer][1] = -1;
            m[1][outer] = -1;
        }
        let datum = CartanDatum::validate(&labels, m)?;
        let sigma = DiagramAutomorphism::new(&datum, vec![2, 1, 3, 0])?;
        return Ok((datum, Some(sigma)));
    }
    if let Some(rest) = name.strip_prefix('A') {
        let (size, flip) = match rest.strip_suffix("+flip") {
            Some(s) => (s, true),
            None => (rest, false),
        };
        let m = size_param(name, size)?;
        let datum = CartanDatum::validate(&numbered(m), path_matrix(m))?;
        if !flip {
            return Ok((datum, None));
        }
        if m % 2 != 0 {
            return Err(CartanError::InvalidSize(name.to_string()));
        }
        let sigma = DiagramAutomorphism::new(&datum, (0..m).rev().collect())?;
        return Ok((datum, Some(sigma)));
    }
    Err(CartanError::UnknownBuiltin(name.to_string()))
}

/// Names accepted by [`builtin`], with small representative sizes.
pub const BUILTIN_EXAMPLES: [&str; 6] =
    ["A2", "A3", "A4+flip", "Dstyle:n=2", "B:n=2", "D4+triality"];

#[cfg(test)]
mod tests {
    use super::*;

    fn b2() -> Vec<Vec<i64>> {
        vec![vec![2, -2], vec![-2, 4]]
    }

    #[test]
    fn validate_examples() {
        let a2 = CartanDatum::validate(&["1", "2"], vec![vec![2, -1], vec![-1, 2]]).unwrap();
        assert!(a2.is_simply_laced() && a2.is_irreducible());
        let b = CartanDatum::validate(&["1", "2"], b2()).unwrap();
        assert!(!b.is_simply_laced());
        let bad = CartanDatum::validate(&["1", "2"], vec![vec![2, -1], vec![-2, 2]]);
        assert_eq!(bad.unwrap_err().kind(), "asymmetric");
    }

    #[test]
    fn validate_error_kinds() {
        let kind = |m: Vec<Vec<i64>>| CartanDatum::validate(&["1", "2"], m).unwrap_err().kind();
        assert_eq!(kind(vec![vec![3, 0], vec![0, 2]]), "bad_diagonal");
        assert_eq!(kind(vec![vec![0, 0], vec![0, 2]]), "bad_diagonal");
        assert_eq!(kind(vec![vec![2, 1], vec![1, 2]]), "positive_off_diagonal");
        assert_eq!(kind(vec![vec![4, -1], vec![-1, 2]]), "non_integral_cartan");
        assert_eq!(
            kind(vec![vec![2, -2], vec![-2, 2]]),
            "not_positive_definite"
        );
        assert_eq!(kind(vec![vec![2, -1]]), "not_square");
        assert_eq!(
            CartanDatum::validate(&["1", "1"], vec![vec![2, 0], vec![0, 2]])
                .unwrap_err()
                .kind(),
            "duplicate_label"
        );
    }

    #[test]
    fn affine_a2_is_not_positive_definite() {
        let m = vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]];
        assert!(matches!(
            CartanDatum::validate(&["0", "1", "2"], m),
            Err(CartanError::NotPositiveDefinite(3, _))
        ));
    }

    #[test]
    fn h_values() {
        let (a2, _) = builtin("A2").unwrap();
        assert_eq!(a2.h_value(0, 1).unwrap(), 3);
        let (b, _) = builtin("B:n=2").unwrap();
        assert_eq!(b.h_value(0, 1).unwrap(), 4);
        let (a3, _) = builtin("A3").unwrap();
        assert_eq!(a3.h_value(0, 2).unwrap(), 2);
        assert!(a3.h_value(1, 1).is_err());
        let g2 = CartanDatum::validate(&["1", "2"], vec![vec![6, -3], vec![-3, 2]]).unwrap();
        assert_eq!(g2.h_value(0, 1).unwrap(), 6);
        for (d, _) in BUILTIN_EXAMPLES.iter().map(|n| builtin(n).unwrap()) {
            for i in 0..d.rank() {
                for j in 0..d.rank() {
                    if i != j {
                        assert_eq!(d.h_value(i, j).unwrap(), d.h_value(j, i).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn builtins_match_definitions() {
        let (a4, s) = builtin("A4+flip").unwrap();
        let s = s.unwrap();
        assert_eq!(a4.rank(), 4);
        assert_eq!(
            (0..4).map(|i| s.apply(i)).collect::<Vec<_>>(),
            vec![3, 2, 1, 0]
        );
        assert_eq!(s.order(), 2);

        let (d, s) = builtin("Dstyle:n=2").unwrap();
        assert_eq!(d.labels(), &["1", "2", "2'"]);
        assert_eq!(d.pairing(0, 1), -1);
        assert_eq!(d.pairing(0, 2), -1);
        assert_eq!(d.pairing(1, 2), 0);
        let s = s.unwrap();
        assert_eq!(s.apply(1), 2);
        assert_eq!(s.apply(0), 0);
        assert_eq!(d.index_of("2′").unwrap(), 2);

        let (b, s) = builtin("B:n=2").unwrap();
        assert!(s.is_none());
        assert_eq!(b.matrix(), &b2()[..]);

        let (d3, _) = builtin("Dstyle:n=3").unwrap();
        assert_eq!(d3.pairing(1, 3), -1);
        assert_eq!(d3.pairing(2, 3), 0);

        assert!(matches!(
            builtin("A3+flip"),
            Err(CartanError::InvalidSize(_))
        ));
        assert!(matches!(builtin("A0"), Err(CartanError::InvalidSize(_))));
        assert!(matches!(builtin("E8"), Err(CartanError::UnknownBuiltin(_))));
    }

    #[test]
    fn folding_to_b2() {
        let (d, s) = builtin("Dstyle:n=2").unwrap();
        let f = fold(&d, &s.unwrap()).unwrap();
        assert_eq!(f.folded.matrix(), &b2()[..]);
        assert_eq!(f.orbits, vec![vec![0], vec![1, 2]]);
        assert_eq!(f.delta, 1);

        let (a, s) = builtin("A4+flip").unwrap();
        let f2 = fold(&a, &s.unwrap()).unwrap();
        assert_eq!(f2.folded.matrix(), &b2()[..]);
        assert_eq!(f2.orbits, vec![vec![0, 3], vec![1, 2]]);
        assert_eq!(f2.delta_eta, vec![1, 2]);
        assert_eq!(f2.delta, 2);
        assert_eq!(f.folded, f2.folded);
    }

    #[test]
    fn identity_fold_is_trivial() {
        for name in ["A1", "A3", "A4", "Dstyle:n=3"] {
            let (d, _) = builtin(name).unwrap();
            let f = fold(&d, &DiagramAutomorphism::identity(&d)).unwrap();
            assert_eq!(f.folded, d);
            assert_eq!(f.delta, 1);
            assert!(f.orbits.iter().all(|o| o.len() == 1));
        }
    }

    #[test]
    fn triality_folds_to_g2() {
        let (d, s) = builtin("D4+triality").unwrap();
        let s = s.unwrap();
        assert_eq!(s.order(), 3);
        let f = fold(&d, &s).unwrap();
        assert_eq!(f.folded.matrix(), &[vec![6, -3], vec![-3, 2]][..]);
        assert_eq!(f.folded.h_value(0, 1).unwrap(), 6);
    }

    #[test]
    fn fold_rejects_bad_input() {
        let (d, _) = builtin("A3").unwrap();
        assert!(matches!(
            DiagramAutomorphism::new(&d, vec![1, 0, 2]),
            Err(CartanError::NotPairingPreserving(..))
        ));
        let (b, _) = builtin("B:n=2").unwrap();
        assert_eq!(
            fold(&b, &DiagramAutomorphism::identity(&b)).unwrap_err(),
            CartanError::NotSimplyLaced
        );
        // A2 ⊔ A2 with σ swapping inside each component has joined orbits but is reducible.
        let mut m = vec![vec![0; 4]; 4];
        for i in 0..4 {
            m[i][i] = 2;
        }
        m[0][1] = -1;
        m[1][0] = -1;
        m[2][3] = -1;
        m[3][2] = -1;
        let d = CartanDatum::validate(&["1", "2", "3", "4"], m).unwrap();
        let s = DiagramAutomorphism::new(&d, vec![1, 0, 3, 2]).unwrap();
        assert_eq!(
            fold(&d, &s).unwrap_err(),
            CartanError::ReducibleWithJoinedOrbit
        );
    }

    #[test]
    fn datum_file_roundtrip() {
        let (d, s) = builtin("A4+flip").unwrap();
        let file = d.to_file(s.as_ref());
        let text = serde_json::to_string(&file).unwrap();
        let (d2, s2) = DatumFile::from_json(&text).unwrap().into_datum().unwrap();
        assert_eq!(d, d2);
        assert_eq!(s, s2);
        assert!(DatumFile::from_json("{\"labels\": 3}").is_err());
    }
}
