//! Desk-scale verification suite: chain certificates, closed forms, path
//! independence, word counts, monoid laws, Frobenius maps, crystal data and
//! folding well-definedness. Randomized checks draw from a seeded ChaCha8
//! stream so reports are reproducible.

use std::collections::{HashMap, VecDeque};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cartan::builtin;
use crate::chamber::{Chamber, ChamberPoint, DecoratedWord};
use crate::folding::chain::verify_builtin_chain;
use crate::folding::{
    b2_closed_form, b2_tropical, b2_tropical_inequality, b2_tropical_nat, trop_int, trop_nat,
    B2Models, FoldedChamberPoint, Folding,
};
use crate::monoid::{Monoid, MonoidElement, MonoidGenerator};
use crate::semifield::{PosRat, Semifield, SymRat, TropNat, Vars};
use crate::weyl::{braid_neighbors, WeylGroup, Word, DEFAULT_WORD_CAP};

#[derive(Clone, Copy, Debug, Default)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Overrides the sample count of every randomized check.
    pub trials: Option<usize>,
}

impl VerifyConfig {
    fn n(&self, default: usize) -> usize {
        self.trials.unwrap_or(default)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub id: u8,
    pub name: &'static str,
    pub checked: usize,
    pub failures: usize,
    /// First few failure descriptions, or a note on a passing run.
    pub details: Vec<String>,
    pub elapsed_ms: u128,
    pub limit_ms: u128,
    pub ok: bool,
}

impl CheckOutcome {
    pub fn within_limit(&self) -> bool {
        self.elapsed_ms < self.limit_ms
    }

    pub fn passed(&self) -> bool {
        self.ok && self.within_limit()
    }

    pub fn line(&self) -> String {
        format!(
            "[{}] {:>2} {:<28} checked={} failures={} time={}ms limit={}ms",
            if self.passed() { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.checked,
            self.failures,
            self.elapsed_ms,
            self.limit_ms
        )
    }
}

const MAX_DETAILS: usize = 8;

#[derive(Default)]
struct Tally {
    checked: usize,
    failures: usize,
    details: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail(what());
        }
    }

    fn fail(&mut self, msg: String) {
        self.failures += 1;
        if self.details.len() < MAX_DETAILS {
            self.details.push(msg);
        }
    }

    fn attempt<T, E: std::fmt::Display>(
        &mut self,
        r: Result<T, E>,
        ctx: impl FnOnce() -> String,
    ) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.checked += 1;
                self.fail(format!("{}: {e}", ctx()));
                None
            }
        }
    }
}

fn finish(id: u8, name: &'static str, limit: Duration, start: Instant, t: Tally) -> CheckOutcome {
    CheckOutcome {
        id,
        name,
        checked: t.checked,
        failures: t.failures,
        details: t.details,
        elapsed_ms: start.elapsed().as_millis(),
        limit_ms: limit.as_millis(),
        ok: t.failures == 0 && t.checked > 0,
    }
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn chain_check(id: u8, name: &'static str, chain: &str, limit: Duration) -> CheckOutcome {
    let start = Instant::now();
    let mut t = Tally::default();
    if let Some(report) = t.attempt(verify_builtin_chain(chain), || chain.to_string()) {
        for s in &report.steps {
            t.check(s.ok, || {
                format!(
                    "line {} -> {}: coordinate {:?}: {}",
                    s.line - 1,
                    s.line,
                    s.offending_coordinate,
                    s.message.clone().unwrap_or_default()
                )
            });
        }
        let e = &report.endpoint;
        t.check(e.ok, || {
            format!(
                "endpoint {} -> {}: {}",
                e.from,
                e.to,
                e.message.clone().unwrap_or_default()
            )
        });
    }
    finish(id, name, limit, start, t)
}

/// 1: the rank-three chain, every step plus the closed-form endpoint.
pub fn chain_a3() -> CheckOutcome {
    chain_check(1, "chain b2-from-a3", "b2-from-a3", secs(1))
}

/// 2: the rank-four chain as printed. A passing corrected variant is noted
/// when the printed data fails.
pub fn chain_a4() -> CheckOutcome {
    let mut out = chain_check(2, "chain b2-from-a4", "b2-from-a4", secs(5));
    if !out.ok {
        if let Ok(r) = verify_builtin_chain("b2-from-a4-corrected") {
            out.details.push(format!(
                "b2-from-a4-corrected: {}/{} steps verified, endpoint {}",
                r.verified_steps(),
                r.steps.len(),
                if r.endpoint.ok { "ok" } else { "failed" }
            ));
        }
    }
    out
}

/// 3: symbolic folded transition in both B₂ models against the closed form.
pub fn closed_form() -> CheckOutcome {
    let start = Instant::now();
    let mut t = Tally::default();
    let vars = Vars::new(["a", "b", "c", "d"]);
    let g = vars.generators();
    let coords = vec![g[3].clone(), g[2].clone(), g[1].clone(), g[0].clone()];
    if let (Some(models), Some(expected)) = (
        t.attempt(B2Models::new(), || "models".into()),
        t.attempt(
            b2_closed_form(&coords[0], &coords[1], &coords[2], &coords[3]),
            || "closed form".into(),
        ),
    ) {
        if let Some((x, y)) = t.attempt(models.transitions(&coords), || "transition".into()) {
            t.check(x == expected.to_vec(), || {
                "A3 model differs from the closed form".into()
            });
            t.check(y == expected.to_vec(), || {
                "A4 model differs from the closed form".into()
            });
            t.check(x == y, || "models disagree".into());
        }
    }
    finish(3, "closed form, both models", secs(10), start, t)
}

/// 4: tropical closed form against the algorithm in ℤ and ℕ.
pub fn tropical_b2(cfg: &VerifyConfig) -> CheckOutcome {
    let start = Instant::now();
    let mut t = Tally::default();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let Some(models) = t.attempt(B2Models::new(), || "models".into()) else {
        return finish(4, "tropical closed form", secs(5), start, t);
    };
    for _ in 0..cfg.n(1000) {
        let v: [i64; 4] = std::array::from_fn(|_| rng.gen_range(-20..=20));
        let [d, c, b, a] = v;
        let expected = b2_tropical(d, c, b, a);
        if let Some((x, y)) =
            t.attempt(models.transitions(&trop_int(&v)), || format!("tropz {v:?}"))
        {
            let want = trop_int(&expected);
            t.check(x == want && y == want, || {
                format!("tropz {v:?}: closed form {expected:?}")
            });
        }
        t.check(b2_tropical_inequality(d, c, b, a), || {
            format!("a+b+d >= min(a+2b,a+2d) fails at {v:?}")
        });
    }
    for _ in 0..cfg.n(1000) {
        let v: [u64; 4] = std::array::from_fn(|_| rng.gen_range(0..=20));
        let [d, c, b, a] = v;
        let Some(expected) = t.attempt(b2_tropical_nat(d, c, b, a), || {
            format!("tropn closed form {v:?}")
        }) else {
            continue;
        };
        if let Some((x, y)) =
            t.attempt(models.transitions(&trop_nat(&v)), || format!("tropn {v:?}"))
        {
            let want = trop_nat(&expected);
            t.check(x == want && y == want, || {
                format!("tropn {v:?}: closed form {expected:?}")
            });
        }
    }
    finish(4, "tropical closed form", secs(5), start, t)
}

/// Symbolic coordinates propagated over every braid edge of the word graph;
/// a word reached twice must receive the same vector.
fn propagate(t: &mut Tally, name: &str) {
    let Some((datum, _)) = t.attempt(builtin(name), || name.to_string()) else {
        return;
    };
    let Some(chamber) = t.attempt(Chamber::new(&datum), || name.to_string()) else {
        return;
    };
    let n = chamber.longest_length();
    let names: Vec<String> = (1..=n).map(|k| format!("x{k}")).collect();
    let vars = Vars::new(&names);
    let base = chamber.base_word().clone();
    let Some(start) = t.attempt(DecoratedWord::new(base.clone(), vars.generators()), || {
        name.into()
    }) else {
        return;
    };
    let mut seen: HashMap<Word, Vec<SymRat>> = HashMap::new();
    seen.insert(base, start.coords.clone());
    let mut queue = VecDeque::from([start]);
    while let Some(dw) = queue.pop_front() {
        for (next, k, r) in braid_neighbors(&datum, &dw.word) {
            let Some(moved) = t.attempt(chamber.apply_move(&dw, k, r), || format!("{name} move"))
            else {
                continue;
            };
            debug_assert_eq!(moved.word, next);
            match seen.get(&next) {
                Some(prev) => {
                    let ok = *prev == moved.coords;
                    t.check(ok, || {
                        format!(
                            "{name}: conflicting coordinates at {}",
                            next.display(&datum)
                        )
                    });
                }
                None => {
                    seen.insert(next, moved.coords.clone());
                    queue.push_back(moved);
                }
            }
        }
    }
    let expected = WeylGroup::new(&datum)
        .longest_word_graph(DEFAULT_WORD_CAP)
        .map(|g| g.len())
        .unwrap_or(0);
    t.check(seen.len() == expected, || {
        format!("{name}: reached {} of {expected} words", seen.len())
    });
}

/// 5: path independence of symbolic transitions in A₂ and A₃.
pub fn path_independence() -> CheckOutcome {
    let start = Instant::now();
    let mut t = Tally::default();
    propagate(&mut t, "A2");
    propagate(&mut t, "A3");
    finish(5, "path independence", secs(10), start, t)
}

/// Reduced words of `w₀` in `S_{n+1}`, found by brute force over all words
/// of length `N` with permutations as the group model.
fn symmetric_group_words(rank: usize) -> Vec<Vec<usize>> {
    let n = rank + 1;
    let len = rank * (rank + 1) / 2;
    let longest: Vec<usize> = (0..n).rev().collect();
    let mut out = Vec::new();
    let mut word = vec![0; len];
    loop {
        let mut perm: Vec<usize> = (0..n).collect();
        for &i in &word {
            perm.swap(i, i + 1);
        }
        if perm == longest {
            out.push(word.clone());
        }
        let mut k = len;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            word[k] += 1;
            if word[k] < rank {
                break;
            }
            word[k] = 0;
        }
    }
}

/// Words of length four equal to `-1` in the signed permutations of two
/// letters, generated by the swap and the sign change of the last letter.
fn hyperoctahedral_words() -> Vec<Vec<usize>> {
    let gens: [[[i64; 2]; 2]; 2] = [[[0, 1], [1, 0]], [[1, 0], [0, -1]]];
    let mut out = Vec::new();
    for code in 0..16usize {
        let word: Vec<usize> = (0..4).map(|k| (code >> (3 - k)) & 1).collect();
        let mut m = [[1i64, 0], [0, 1]];
        for &g in &word {
            let s = gens[g];
            m = [
                [
                    m[0][0] * s[0][0] + m[0][1] * s[1][0],
                    m[0][0] * s[0][1] + m[0][1] * s[1][1],
                ],
                [
                    m[1][0] * s[0][0] + m[1][1] * s[1][0],
                    m[1][0] * s[0][1] + m[1][1] * s[1][1],
                ],
            ];
        }
        if m == [[-1, 0], [0, -1]] {
            out.push(word);
        }
    }
    out
}

/// 6: reduced-word counts against independent group models.
pub fn word_counts() -> CheckOutcome {
    let start = Instant::now();
    let mut t = Tally::default();
    for (name, rank, expected) in [("A2", 2, 2usize), ("A3", 3, 16)] {
        let Some((datum, _)) = t.attempt(builtin(name), || name.into()) else {
            continue;
        };
        let Some(graph) = t.attempt(
            WeylGroup::new(&datum).longest_word_graph(DEFAULT_WORD_CAP),
            || name.into(),
        ) else {
            continue;
        };
        let mut ours: Vec<Vec<usize>> = graph.vertices().iter().map(|w| w.0.clone()).collect();
        ours.sort();
        let oracle = symmetric_group_words(rank);
        t.check(ours.len() == expected, || {
            format!("{name}: {} words, expected {expected}", ours.len())
        });
        t.check(ours == oracle, || {
            format!("{name}: word set differs from the permutation oracle")
        });
        t.check(graph.is_connected(), || {
            format!("{name}: word graph disconnected")
        });
    }
    for source in ["Dstyle:n=2", "A4+flip"] {
        let Some(f) = t.attempt(Folding::builtin(source), || source.into()) else {
            continue;
        };
        let Some(graph) = t.attempt(
            f.folded_group().longest_word_graph(DEFAULT_WORD_CAP),
            || source.into(),
        ) else {
            continue;
        };
        let mut ours: Vec<Vec<usize>> = graph.vertices().iter().map(|w| w.0.clone()).collect();
        ours.sort();
        let oracle = hyperoctahedral_words();
        t.check(ours == oracle, || {
            format!("B2 from {source}: {ours:?} vs oracle {oracle:?}")
        });
        t.check(graph.edges().len() == 1 && graph.edges()[0].r == 4, || {
            format!("B2 from {source}: expected one edge of length 4")
        });
    }
    finish(6, "reduced-word counts", secs(1), start, t)
}

struct Setting {
    name: &'static str,
    chamber: Chamber,
}

fn settings(t: &mut Tally, names: &[&'static str]) -> Vec<Setting> {
    names
        .iter()
        .filter_map(|&name| {
            let (datum, _) = t.attempt(builtin(name), || name.into())?;
            let chamber = t.attempt(Chamber::new(&datum), || name.into())?;
            Some(Setting { name, chamber })
        })
        .collect()
}

fn random_element(rng: &mut ChaCha8Rng, m: &Monoid, max: u64) -> MonoidElement {
    MonoidElement {
        coords: (0..m.length()).map(|_| rng.gen_range(0..=max)).collect(),
    }
}

fn xi(i: usize, n: u64) -> MonoidGenerator {
    MonoidGenerator { i, n: n as i64 }
}

/// Pairs `(i, j)` with the given pairing.
fn pairs_with(chamber: &Chamber, pairing: i64) -> Vec<(usize, usize)> {
    let d = chamber.datum();
    let mut out = Vec::new();
    for i in 0..d.rank() {
        for j in 0..d.rank() {
            if i != j && d.pairing(i, j) == pairing {
                out.push((i, j));
            }
        }
    }
    out
}

/// 7: relations (i)-(iii), associativity and independence of the word used
/// for a generator action.
pub fn monoid_laws(cfg: &VerifyConfig) -> CheckOutcome {
    let start = Instant::now();
    let mut t = Tally::default();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x7);
    let ss = settings(&mut t, &["A2", "A3"]);
    if ss.len() < 2 {
        return finish(7, "monoid laws", secs(30), start, t);
    }
    let monoids: Vec<Monoid> = ss.iter().map(|s| Monoid::new(&s.chamber)).collect();
    let trials = cfg.n(200);

    for k in 0..trials {
        let (s, m) = (&ss[k % 2], &monoids[k % 2]);
        let e = random_element(&mut rng, m, 6);
        let i = rng.gen_range(0..m.rank());
        let (a, b) = (rng.gen_range(0..=6), rng.gen_range(0..=6));
        let lhs = m
            .left_mul_gen(xi(i, b), &e)
            .and_then(|x| m.left_mul_gen(xi(i, a), &x));
        let rhs = m.left_mul_gen(xi(i, a.min(b)), &e);
        t.check(lhs.is_ok() && lhs == rhs, || {
            format!("(i) {} i={i} a={a} b={b} m={:?}", s.name, e.coords)
        });
    }

    let commuting = pairs_with(&ss[1].chamber, 0);
    for _ in 0..trials {
        let m = &monoids[1];
        let e = random_element(&mut rng, m, 6);
        let &(i, j) = commuting.choose(&mut rng).expect("A3 has commuting nodes");
        let (a, b) = (rng.gen_range(0..=6), rng.gen_range(0..=6));
        let lhs = m
            .left_mul_gen(xi(j, b), &e)
            .and_then(|x| m.left_mul_gen(xi(i, a), &x));
        let rhs = m
            .left_mul_gen(xi(i, a), &e)
            .and_then(|x| m.left_mul_gen(xi(j, b), &x));
        t.check(lhs.is_ok() && lhs == rhs, || {
            format!("(ii) A3 i={i} j={j} a={a} b={b} m={:?}", e.coords)
        });
    }

    for k in 0..trials {
        let (s, m) = (&ss[k % 2], &monoids[k % 2]);
        let joined = pairs_with(&s.chamber, -1);
        let &(i, j) = joined
            .choose(&mut rng)
            .expect("connected data have joined nodes");
        let e = random_element(&mut rng, m, 6);
        let (a, b, c) = (
            rng.gen_range(0..=6),
            rng.gen_range(0..=6),
            rng.gen_range(0..=6),
        );
        let mn = a.min(c);
        let (a2, b2, c2) = (b + c - mn, mn, a + b - mn);
        let lhs = m
            .left_mul_gen(xi(i, c), &e)
            .and_then(|x| m.left_mul_gen(xi(j, b), &x))
            .and_then(|x| m.left_mul_gen(xi(i, a), &x));
        let rhs = m
            .left_mul_gen(xi(j, c2), &e)
            .and_then(|x| m.left_mul_gen(xi(i, b2), &x))
            .and_then(|x| m.left_mul_gen(xi(j, a2), &x));
        t.check(lhs.is_ok() && lhs == rhs, || {
            format!(
                "(iii) {} i={i} j={j} (a,b,c)=({a},{b},{c}) m={:?}",
                s.name, e.coords
            )
        });
    }

    for k in 0..trials {
        let (s, m) = (&ss[k % 2], &monoids[k % 2]);
        let (x, y, z) = (
            random_element(&mut rng, m, 6),
            random_element(&mut rng, m, 6),
            random_element(&mut rng, m, 6),
        );
        let lhs = m.mul(&x, &y).and_then(|xy| m.mul(&xy, &z));
        let rhs = m.mul(&y, &z).and_then(|yz| m.mul(&x, &yz));
        t.check(lhs.is_ok() && lhs == rhs, || {
            format!(
                "associativity {} {:?} {:?} {:?}",
                s.name, x.coords, y.coords, z.coords
            )
        });
    }

    let a3 = &ss[1].chamber;
    let words: Vec<Word> = a3
        .group()
        .longest_word_graph(DEFAULT_WORD_CAP)
        .map(|g| g.vertices().to_vec())
        .unwrap_or_default();
    for _ in 0..cfg.n(100) {
        let m = &monoids[1];
        let i = rng.gen_range(0..m.rank());
        let starting: Vec<&Word> = words.iter().filter(|w| w.first() == Some(i)).collect();
        let (Some(&w1), Some(&w2)) = (starting.choose(&mut rng), starting.choose(&mut rng)) else {
            t.fail(format!("no reduced word starts with {i}"));
            continue;
        };
        let e = random_element(&mut rng, m, 6);
        let n = rng.gen_range(0..=6);
        let r1 = m.left_mul_gen_via(xi(i, n), &e, w1);
        let r2 = m.left_mul_gen_via(xi(i, n), &e, w2);
        t.check(r1.is_ok() && r1 == r2, || {
            format!("word choice: i={i} n={n} {:?} vs {:?}", w1.0, w2.0)
        });
    }
    finish(7, "monoid laws", secs(30), start, t)
}

/// σ-fixed monoid elements: `s̄` of random folded coordinates.
fn sigma_fixed_element(
    rng: &mut ChaCha8Rng,
    f: &Folding,
    max: u64,
) -> Result<MonoidElement, crate::folding::FoldingError> {
    let n = f.folded_base_word().len();
    let fcp = FoldedChamberPoint {
        coords: (0..n).map(|_| TropNat(rng.gen_range(0..=max))).collect(),
    };
    let cp = f.s_bar(&fcp)?;
    Ok(MonoidElement {
        coords: cp.coords.iter().map(|c| c.0).collect(),
    })
}

/// 8: Frobenius maps are multiplicative, compose and commute with σ.
pub fn frobenius(cfg: &VerifyConfig) -> CheckOutcome {
    let start = Instant::now();
    let mut t = Tally::default();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x8);
    let ss = settings(&mut t, &["A2", "A3"]);
    if ss.len() < 2 {
        return finish(8, "frobenius", secs(30), start, t);
    }
    let monoids: Vec<Monoid> = ss.iter().map(|s| Monoid::new(&s.chamber)).collect();

    for k in 0..cfg.n(500) {
        let (s, m) = (&ss[k % 2], &monoids[k % 2]);
        let e = [1, 2, 3][k % 3];
        let (x, y) = (
            random_element(&mut rng, m, 6),
            random_element(&mut rng, m, 6),
        );
        let lhs = m.mul(&x, &y).map(|xy| m.frobenius(e, &xy));
        let rhs = m.mul(&m.frobenius(e, &x), &m.frobenius(e, &y));
        t.check(lhs.is_ok() && lhs == rhs, || {
            format!(
                "multiplicative {} e={e} {:?} {:?}",
                s.name, x.coords, y.coords
            )
        });
    }

    for k in 0..cfg.n(100) {
        let m = &monoids[k % 2];
        let (e1, e2) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let x = random_element(&mut rng, m, 6);
        let ok = m.frobenius(e1, &m.frobenius(e2, &x)) == m.frobenius(e1 * e2, &x);
        t.check(ok, || format!("composition e={e1},{e2} {:?}", x.coords));
    }

    let foldings: Vec<Folding> = ["Dstyle:n=2", "A4+flip"]
        .iter()
        .filter_map(|&n| t.attempt(Folding::builtin(n), || n.into()))
        .collect();
    for k in 0..cfg.n(100) {
        let Some(f) = foldings.get(k % foldings.len().max(1)) else {
            break;
        };
        let m = Monoid::new(f.chamber());
        let Some(x) = t.attempt(sigma_fixed_element(&mut rng, f, 6), || "s_bar".into()) else {
            continue;
        };
        let e = rng.gen_range(1..=3);
        let fixed = m.is_sigma_fixed(&x, f.sigma());
        t.check(fixed == Ok(true), || {
            format!("sample {:?} is not σ-fixed", x.coords)
        });
        let lhs = m.sigma(&m.frobenius(e, &x), f.sigma());
        let rhs = m.sigma(&x, f.sigma()).map(|y| m.frobenius(e, &y));
        t.check(lhs.is_ok() && lhs == rhs, || {
            format!("σ commutation e={e} {:?}", x.coords)
        });
        let scaled = m.frobenius(e, &x);
        t.check(m.is_sigma_fixed(&scaled, f.sigma()) == Ok(true), || {
            format!("Φ{e} leaves the fixed points")
        });
    }
    finish(8, "frobenius", secs(30), start, t)
}

fn folded_lambda_rho<K: Semifield>(
    t: &mut Tally,
    f: &Folding,
    fcp: &FoldedChamberPoint<K>,
    tag: &str,
) {
    let Some(cp) = t.attempt(f.s_bar(fcp), || format!("{tag} s_bar")) else {
        return;
    };
    for orbit in 0..f.folded_datum().rank() {
        let pairs = [
            (f.folded_lambda(fcp, orbit), f.lambda_eta(&cp, orbit), "λ"),
            (f.folded_rho(fcp, orbit), f.rho_eta(&cp, orbit), "ρ"),
        ];
        for (folded, lifted, which) in pairs {
            match (folded, lifted) {
                (Ok(v), Ok(vs)) => t.check(vs.iter().all(|x| *x == v), || {
                    format!("{tag}: {which}_η disagrees with the folded value on orbit {orbit}")
                }),
                (Err(e), _) | (_, Err(e)) => t.fail(format!("{tag}: {e}")),
            }
        }
    }
}

/// 9: generator scans against coordinates, crystal moves, and folded `λ`/`ρ`.
pub fn crystal(cfg: &VerifyConfig) -> CheckOutcome {
    let start = Instant::now();
    let mut t = Tally::default();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x9);
    let ss = settings(&mut t, &["A2", "A3"]);
    if ss.len() < 2 {
        return finish(9, "crystal consistency", secs(30), start, t);
    }
    let monoids: Vec<Monoid> = ss.iter().map(|s| Monoid::new(&s.chamber)).collect();

    for k in 0..cfg.n(200) {
        let (s, m) = (&ss[k % 2], &monoids[k % 2]);
        let x = random_element(&mut rng, m, 6);
        let i = rng.gen_range(0..m.rank());
        let scan = m.l_scan(&x, i);
        let coord = m.l_coord(&x, i);
        t.check(scan.is_ok() && scan == coord, || {
            format!("l_{i} {} {:?}: {scan:?} vs {coord:?}", s.name, x.coords)
        });
        let scan = m.r_scan(&x, i);
        let coord = m.r_coord(&x, i);
        t.check(scan.is_ok() && scan == coord, || {
            format!("r_{i} {} {:?}: {scan:?} vs {coord:?}", s.name, x.coords)
        });
    }

    for k in 0..cfg.n(100) {
        let (s, m) = (&ss[k % 2], &monoids[k % 2]);
        let x = random_element(&mut rng, m, 6);
        let i = rng.gen_range(0..m.rank());
        let n = rng.gen_range(0..=5);
        let Some(low) = t.attempt(m.lower_to_zero(&x, i), || "lower".into()) else {
            continue;
        };
        let Some(up) = t.attempt(m.raise_to(&low, i, n), || "raise".into()) else {
            continue;
        };
        t.check(m.l_coord(&up, i) == Ok(n), || {
            format!("raise_to({n}) misses l_{i} in {}", s.name)
        });
        t.check(m.lower_to_zero(&up, i).as_ref() == Ok(&low), || {
            format!(
                "lower_to_zero∘raise_to({n}) ≠ id on {:?} in {}",
                low.coords, s.name
            )
        });
        let l = m.l_coord(&x, i).unwrap_or(u64::MAX);
        t.check(m.raise_to(&low, i, l).as_ref() == Ok(&x), || {
            format!(
                "raise_to(l)∘lower_to_zero ≠ id on {:?} in {}",
                x.coords, s.name
            )
        });
    }

    let foldings: Vec<(&str, Folding)> = ["Dstyle:n=2", "A4+flip"]
        .iter()
        .filter_map(|&n| t.attempt(Folding::builtin(n), || n.into()).map(|f| (n, f)))
        .collect();
    for k in 0..cfg.n(100) {
        let Some((name, f)) = foldings.get(k % foldings.len().max(1)) else {
            break;
        };
        let len = f.folded_base_word().len();
        if k % 4 < 2 {
            let coords = (0..len)
                .map(|_| crate::semifield::TropInt(rng.gen_range(-6..=6)))
                .collect();
            folded_lambda_rho(
                &mut t,
                f,
                &FoldedChamberPoint { coords },
                &format!("{name} tropz"),
            );
        } else {
            let coords = (0..len)
                .map(|_| {
                    PosRat::from_frac(rng.gen_range(1..=9), rng.gen_range(1..=9))
                        .expect("nonzero denominator")
                })
                .collect();
            folded_lambda_rho(
                &mut t,
                f,
                &FoldedChamberPoint { coords },
                &format!("{name} rat"),
            );
        }
    }
    finish(9, "crystal consistency", secs(30), start, t)
}

/// 10: `s` is independent of the filling and lands in σ-fixed points, with
/// symbolic coordinates on both folded words of both B₂ models.
pub fn folding_well_defined() -> CheckOutcome {
    let start = Instant::now();
    let mut t = Tally::default();
    let vars = Vars::new(["a", "b", "c", "d"]);
    let g = vars.generators();
    for source in ["Dstyle:n=2", "A4+flip"] {
        let Some(f) = t.attempt(Folding::builtin(source), || source.into()) else {
            continue;
        };
        let words = f
            .folded_group()
            .longest_word_graph(DEFAULT_WORD_CAP)
            .map(|gr| gr.vertices().to_vec())
            .unwrap_or_default();
        for word in words {
            let label = word.display(f.folded_datum()).to_string();
            let Some(fdw) = t.attempt(f.decorate(word.clone(), g.clone()), || label.clone()) else {
                continue;
            };
            let Some(fillings) = t.attempt(f.all_fillings(&word), || label.clone()) else {
                continue;
            };
            let mut first: Option<ChamberPoint<SymRat>> = None;
            for filling in &fillings {
                let Some(cp) = t.attempt(f.s_map_with(&fdw, filling), || label.clone()) else {
                    continue;
                };
                let fixed = f.chamber().is_sigma_fixed(&cp, f.sigma());
                t.check(fixed == Ok(true), || {
                    format!("{source} {label}: image not σ-fixed")
                });
                match &first {
                    None => first = Some(cp),
                    Some(p) => t.check(*p == cp, || {
                        format!(
                            "{source} {label}: filling {:?} changes s",
                            filling.concatenation().0
                        )
                    }),
                }
            }
            if let Some(cp) = first {
                let back = f.fold_coordinates(&cp, &word).map(|x| x.coords);
                t.check(back.as_ref() == Ok(&g), || {
                    format!("{source} {label}: fold∘s ≠ id")
                });
            }
        }
    }
    finish(10, "folding well-definedness", secs(10), start, t)
}

/// Every check in order.
pub fn run_all(cfg: &VerifyConfig) -> Vec<CheckOutcome> {
    vec![
        chain_a3(),
        chain_a4(),
        closed_form(),
        tropical_b2(cfg),
        path_independence(),
        word_counts(),
        monoid_laws(cfg),
        frobenius(cfg),
        crystal(cfg),
        folding_well_defined(),
    ]
}

/// The check with the given number.
pub fn run_one(id: u8, cfg: &VerifyConfig) -> Option<CheckOutcome> {
    Some(match id {
        1 => chain_a3(),
        2 => chain_a4(),
        3 => closed_form(),
        4 => tropical_b2(cfg),
        5 => path_independence(),
        6 => word_counts(),
        7 => monoid_laws(cfg),
        8 => frobenius(cfg),
        9 => crystal(cfg),
        10 => folding_well_defined(),
        _ => return None,
    })
}
