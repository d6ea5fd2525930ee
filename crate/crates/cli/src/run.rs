use std::path::Path;

use serde_json::{json, Value};

use foldline_core::cartan::{builtin, fold, CartanDatum, DatumFile, DiagramAutomorphism};
use foldline_core::chamber::{Chamber, ChamberPoint, TraceStep};
use foldline_core::folding::chain::verify_builtin_chain;
use foldline_core::folding::{B2Models, Folding};
use foldline_core::monoid::{folded_mul, Monoid, MonoidElement};
use foldline_core::semifield::{Model, SemifieldValue, Vars};
use foldline_core::verify::{self, CheckOutcome, VerifyConfig};
use foldline_core::weyl::{braid_neighbors, WeylGroup, Word};

use crate::{
    Command, DatumArgs, DatumCommand, Failure, FoldedCommand, MonoidCommand, Output, SampleArgs,
    StringArgs, TransitionArgs, ValueArgs, VerifyCommand, WordsCommand,
};

type Res = Result<Output, Failure>;

macro_rules! domain {
    ($e:expr) => {
        $e.map_err(|e| Failure::new(e.kind(), &e))?
    };
}

fn ok(payload: Value) -> Res {
    Ok(Output::Json {
        payload,
        trace: None,
    })
}

struct Loaded {
    name: String,
    datum: CartanDatum,
    sigma: Option<DiagramAutomorphism>,
}

fn load(args: &DatumArgs) -> Result<Loaded, Failure> {
    let source = match (&args.builtin, &args.datum) {
        (Some(b), None) => return load_builtin(b),
        (None, Some(d)) => d,
        (Some(_), Some(_)) => {
            return Err(Failure::usage("give either --datum or --builtin, not both"))
        }
        (None, None) => return Err(Failure::usage("a datum is required (--datum or --builtin)")),
    };
    if Path::new(source).is_file() {
        let text = std::fs::read_to_string(source)
            .map_err(|e| Failure::new("io", format!("{source}: {e}")))?;
        let file = domain!(DatumFile::from_json(&text));
        let (datum, sigma) = domain!(file.into_datum());
        return Ok(Loaded {
            name: source.clone(),
            datum,
            sigma,
        });
    }
    load_builtin(source)
}

fn load_builtin(name: &str) -> Result<Loaded, Failure> {
    let (datum, sigma) = domain!(builtin(name));
    Ok(Loaded {
        name: name.to_string(),
        datum,
        sigma,
    })
}

fn folding_of(l: &Loaded) -> Result<Folding, Failure> {
    let sigma = l
        .sigma
        .clone()
        .unwrap_or_else(|| DiagramAutomorphism::identity(&l.datum));
    Ok(domain!(Folding::new(&l.datum, &sigma)))
}

fn chamber_of(l: &Loaded) -> Result<Chamber, Failure> {
    Ok(domain!(Chamber::new(&l.datum)))
}

fn split(text: &str) -> Vec<&str> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect()
}

fn values(args: &ValueArgs) -> Result<Vec<SemifieldValue>, Failure> {
    let model: Model = args.semifield.parse().map_err(Failure::usage)?;
    let vars = match &args.vars {
        Some(v) => Vars::new(split(v)),
        None => {
            let mut letters: Vec<char> = args
                .coords
                .chars()
                .filter(|c| c.is_ascii_alphabetic())
                .collect();
            letters.sort_unstable();
            letters.dedup();
            Vars::new(letters.iter().map(|c| c.to_string()))
        }
    };
    split(&args.coords)
        .into_iter()
        .map(|c| SemifieldValue::parse(model, c, &vars).map_err(|e| Failure::new(e.kind(), &e)))
        .collect()
}

fn naturals(text: &str) -> Result<Vec<u64>, Failure> {
    split(text)
        .into_iter()
        .map(|c| {
            c.parse::<u64>()
                .map_err(|e| Failure::new("value_format", format!("{c:?}: {e}")))
        })
        .collect()
}

fn word_json(w: &Word, datum: &CartanDatum) -> Value {
    json!(w.labels(datum))
}

fn trace_json(trace: &[TraceStep<SemifieldValue>], datum: &CartanDatum) -> Value {
    Value::Array(
        trace
            .iter()
            .map(|s| {
                let step = s.step.map(|(k, r)| json!({"k": k + 1, "r": r}));
                json!({
                    "word": s.decorated.display(datum).to_string(),
                    "decorated": s.decorated.to_json(datum),
                    "move": step,
                })
            })
            .collect(),
    )
}

fn datum_json(d: &CartanDatum, sigma: Option<&DiagramAutomorphism>) -> Value {
    let cartan: Vec<Vec<i64>> = (0..d.rank())
        .map(|i| (0..d.rank()).map(|j| d.cartan_integer(i, j)).collect())
        .collect();
    let mut v = json!(d.to_file(sigma));
    v["rank"] = json!(d.rank());
    v["cartan_matrix"] = json!(cartan);
    v["simply_laced"] = json!(d.is_simply_laced());
    v["irreducible"] = json!(d.is_irreducible());
    v
}

fn fold_payload(l: &Loaded) -> Res {
    let sigma = l
        .sigma
        .clone()
        .unwrap_or_else(|| DiagramAutomorphism::identity(&l.datum));
    let folded = domain!(fold(&l.datum, &sigma));
    let orbits: Vec<Vec<&str>> = folded
        .orbits
        .iter()
        .map(|o| o.iter().map(|&i| l.datum.label(i)).collect())
        .collect();
    let group = WeylGroup::new(&folded.folded);
    ok(json!({
        "source": l.name,
        "orbits": orbits,
        "delta_eta": folded.delta_eta,
        "delta": folded.delta,
        "folded": datum_json(&folded.folded, None),
        "folded_longest_length": group.longest_length(),
    }))
}

pub fn run(cmd: &Command) -> Res {
    match cmd {
        Command::Datum(DatumCommand::Validate(a)) => {
            let l = load(a)?;
            let group = WeylGroup::new(&l.datum);
            let mut p = datum_json(&l.datum, l.sigma.as_ref());
            p["longest_length"] = json!(group.longest_length());
            ok(p)
        }
        Command::Datum(DatumCommand::Fold(a)) | Command::Fold(a) => fold_payload(&load(a)?),
        Command::Words(w) => words(w),
        Command::Transition(t) => transition(t),
        Command::Lambda(s) => string_end(s, true),
        Command::Rho(s) => string_end(s, false),
        Command::Verify(v) => verify_cmd(v),
        Command::Folded(FoldedCommand::Transition(t)) => folded_transition(t),
        Command::Folded(FoldedCommand::CompareModels { values: v }) => {
            let coords = values(v)?;
            if coords.len() != 4 {
                return Err(Failure::usage(
                    "compare-models takes four coordinates (d,c,b,a)",
                ));
            }
            let models = domain!(B2Models::new());
            let (x, y) = domain!(models.transitions(&coords));
            let js = |v: &[SemifieldValue]| {
                Value::Array(v.iter().map(SemifieldValue::to_json).collect())
            };
            ok(
                json!({"from": "2121", "to": "1212", "via_a3": js(&x), "via_a4": js(&y), "agree": x == y}),
            )
        }
        Command::Monoid(m) => monoid(m),
    }
}

fn words(cmd: &WordsCommand) -> Res {
    match cmd {
        WordsCommand::Enumerate {
            datum,
            folded,
            dot,
            cap,
        } => {
            let l = load(datum)?;
            let d = if *folded {
                folding_of(&l)?.folded_datum().clone()
            } else {
                l.datum.clone()
            };
            let group = WeylGroup::new(&d);
            let graph = domain!(group.longest_word_graph(*cap));
            if *dot {
                return Ok(Output::Text(graph.to_dot(&d)));
            }
            let edges: Vec<Value> = graph
                .edges()
                .iter()
                .map(|e| json!({"a": e.a, "b": e.b, "k": e.position + 1, "r": e.r}))
                .collect();
            ok(json!({
                "datum": d.labels(),
                "length": group.longest_length(),
                "count": graph.len(),
                "connected": graph.is_connected(),
                "words": graph.vertices().iter().map(|w| word_json(w, &d)).collect::<Vec<_>>(),
                "edges": edges,
            }))
        }
        WordsCommand::Neighbors {
            datum,
            folded,
            word,
        } => {
            let l = load(datum)?;
            let d = if *folded {
                folding_of(&l)?.folded_datum().clone()
            } else {
                l.datum.clone()
            };
            let w = domain!(Word::parse(&d, word));
            let group = WeylGroup::new(&d);
            if !group.is_reduced(&w) {
                return Err(Failure::new(
                    "not_reduced",
                    format!("{word} is not a reduced word"),
                ));
            }
            let out: Vec<Value> = braid_neighbors(&d, &w)
                .into_iter()
                .map(|(n, k, r)| json!({"word": n.display(&d).to_string(), "k": k + 1, "r": r}))
                .collect();
            ok(json!(out))
        }
    }
}

fn transition(t: &TransitionArgs) -> Res {
    let l = load(&t.datum)?;
    let chamber = chamber_of(&l)?;
    let d = chamber.datum();
    let from = domain!(Word::parse(d, &t.from));
    let to = domain!(Word::parse(d, &t.to));
    let dw = domain!(chamber.decorate(from, values(&t.values)?));
    let trace = domain!(chamber.transition_trace(&dw, &to));
    let last = &trace.last().expect("trace starts with the input").decorated;
    let payload = json!({
        "from": dw.to_json(d),
        "to": last.to_json(d),
        "word": last.display(d).to_string(),
        "coords": last.coords.iter().map(SemifieldValue::to_json).collect::<Vec<_>>(),
    });
    let trace = t.trace.then(|| trace_json(&trace, d));
    Ok(Output::Json { payload, trace })
}

fn string_end(s: &StringArgs, first: bool) -> Res {
    let l = load(&s.datum)?;
    let chamber = chamber_of(&l)?;
    let d = chamber.datum();
    let word = match &s.word {
        Some(w) => domain!(Word::parse(d, w)),
        None => chamber.base_word().clone(),
    };
    let i = domain!(d.index_of(&s.node));
    let dw = domain!(chamber.decorate(word, values(&s.values)?));
    let cp: ChamberPoint<SemifieldValue> = domain!(chamber.canonical(&dw));
    let v = if first {
        domain!(chamber.lambda(&cp, i))
    } else {
        domain!(chamber.rho(&cp, i))
    };
    ok(json!({"node": d.label(i), "value": v.to_json()}))
}

fn folded_transition(t: &TransitionArgs) -> Res {
    let l = load(&t.datum)?;
    let f = folding_of(&l)?;
    let fd = f.folded_datum();
    let from = domain!(f.folded_word(&t.from));
    let to = domain!(f.folded_word(&t.to));
    let fdw = domain!(f.decorate(from, values(&t.values)?));
    let (out, trace) = domain!(f.folded_transition_trace(&fdw, &to));
    let unfolded = domain!(f.unfold(&fdw));
    let payload = json!({
        "from": fdw.to_json(fd),
        "to": out.to_json(fd),
        "coords": out.coords.iter().map(SemifieldValue::to_json).collect::<Vec<_>>(),
        "unfolded_from": unfolded.display(f.source()).to_string(),
    });
    let trace = t.trace.then(|| trace_json(&trace, f.source()));
    Ok(Output::Json { payload, trace })
}

fn cfg(s: &SampleArgs) -> VerifyConfig {
    VerifyConfig {
        seed: s.seed,
        trials: s.trials,
    }
}

fn outcome(o: CheckOutcome) -> Res {
    let payload = serde_json::to_value(&o).expect("plain data");
    if o.ok {
        ok(payload)
    } else {
        Err(Failure {
            kind: "verification_failed".into(),
            message: format!("check {} ({}) failed", o.id, o.name),
            payload: Some(payload),
        })
    }
}

fn verify_cmd(v: &VerifyCommand) -> Res {
    match v {
        VerifyCommand::Chain { id } => {
            let report = domain!(verify_builtin_chain(id));
            let payload = json!({
                "report": report,
                "verified_steps": report.verified_steps(),
                "total_steps": report.steps.len(),
            });
            if report.ok {
                ok(payload)
            } else {
                let first = report.first_failure().map(|s| s.line).unwrap_or(0);
                Err(Failure {
                    kind: "verification_failed".into(),
                    message: format!("chain {id}: first failing step ends at line {first}"),
                    payload: Some(payload),
                })
            }
        }
        VerifyCommand::PathIndependence => outcome(verify::path_independence()),
        VerifyCommand::TropicalB2(s) => outcome(verify::tropical_b2(&cfg(s))),
        VerifyCommand::ClosedForm => outcome(verify::closed_form()),
        VerifyCommand::WordCounts => outcome(verify::word_counts()),
        VerifyCommand::Monoid(s) => outcome(verify::monoid_laws(&cfg(s))),
        VerifyCommand::Frobenius(s) => outcome(verify::frobenius(&cfg(s))),
        VerifyCommand::Crystal(s) => outcome(verify::crystal(&cfg(s))),
        VerifyCommand::Folding => outcome(verify::folding_well_defined()),
        VerifyCommand::All { level, sample } => {
            if level != "desk" {
                return Err(Failure::usage(format!(
                    "unknown level {level:?} (only \"desk\")"
                )));
            }
            let all = verify::run_all(&cfg(sample));
            let failed: Vec<u8> = all.iter().filter(|o| !o.passed()).map(|o| o.id).collect();
            let payload = json!({
                "checks": all,
                "passed": all.len() - failed.len(),
                "failed": failed,
            });
            if failed.is_empty() {
                ok(payload)
            } else {
                Err(Failure {
                    kind: "verification_failed".into(),
                    message: format!("checks {failed:?} failed"),
                    payload: Some(payload),
                })
            }
        }
    }
}

fn element(m: &Monoid, coords: Vec<u64>) -> Result<MonoidElement, Failure> {
    Ok(domain!(m.element(coords)))
}

fn monoid(cmd: &MonoidCommand) -> Res {
    match cmd {
        MonoidCommand::Mul {
            datum,
            folded,
            left,
            right,
        } => {
            let l = load(datum)?;
            if *folded {
                let f = folding_of(&l)?;
                let p = domain!(folded_mul(&f, &naturals(left)?, &naturals(right)?));
                return ok(json!({
                    "word": f.folded_base_word().labels(f.folded_datum()),
                    "coords": p,
                }));
            }
            let chamber = chamber_of(&l)?;
            let m = Monoid::new(&chamber);
            let (a, b) = (
                element(&m, naturals(left)?)?,
                element(&m, naturals(right)?)?,
            );
            let p = domain!(m.mul(&a, &b));
            ok(m.to_json(&p))
        }
        MonoidCommand::Frobenius { datum, e, coords } => {
            if *e == 0 {
                return Err(Failure::usage("--e must be at least 1"));
            }
            let l = load(datum)?;
            let chamber = chamber_of(&l)?;
            let m = Monoid::new(&chamber);
            let x = element(&m, naturals(coords)?)?;
            ok(m.to_json(&m.frobenius(*e, &x)))
        }
        MonoidCommand::Lstring {
            datum,
            coords,
            node,
        } => {
            let l = load(datum)?;
            let chamber = chamber_of(&l)?;
            let m = Monoid::new(&chamber);
            let x = element(&m, naturals(coords)?)?;
            let i = domain!(chamber.datum().index_of(node));
            ok(json!({
                "element": m.to_json(&x),
                "node": chamber.datum().label(i),
                "l_scan": domain!(m.l_scan(&x, i)),
                "l_coord": domain!(m.l_coord(&x, i)),
                "r_scan": domain!(m.r_scan(&x, i)),
                "r_coord": domain!(m.r_coord(&x, i)),
            }))
        }
        MonoidCommand::CrystalGraph { datum, bound, dot } => {
            let l = load(datum)?;
            let chamber = chamber_of(&l)?;
            let m = Monoid::new(&chamber);
            let g = domain!(m.crystal_graph(*bound));
            let labels = chamber.datum().labels();
            if *dot {
                return Ok(Output::Text(g.to_dot(labels)));
            }
            let edges: Vec<Value> = g
                .edges
                .iter()
                .map(|&(a, b, i)| json!({"from": a, "to": b, "i": labels[i]}))
                .collect();
            ok(json!({
                "word": chamber.base_word().labels(chamber.datum()),
                "vertices": g.vertices.iter().map(|v| &v.coords).collect::<Vec<_>>(),
                "edges": edges,
            }))
        }
    }
}
