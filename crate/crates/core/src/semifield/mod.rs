//! Semifields: sets with addition, multiplication and division but no
//! subtraction.
//!
//! Four models are provided:
//!
//! * [`PosRat`]: strictly positive rationals with the ordinary operations.
//! * [`TropInt`]: ℤ with `add = min`, `mul = +`, `div = -`.
//! * [`TropNat`]: the subset ℕ of the tropical integers. Division is partial
//!   and fails when the result would leave ℕ.
//! * [`SymRat`]: subtraction-free rational functions in declared variables,
//!   used as the exact oracle for identity checks.
//!
//! [`SemifieldValue`] wraps all four for callers that pick the model at run
//! time (the CLI, JSON payloads).

mod expr;
mod poly;
mod rational;
mod symbolic;
mod tropical;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use expr::{Expr, ExprError};
pub use poly::{Exponents, Poly, PolyDisplay};
pub use rational::PosRat;
pub use symbolic::{SymRat, Vars};
pub use tropical::{iota, iota_inv, iota_nat, TropInt, TropNat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemifieldError {
    #[error("operands belong to different semifield models ({0} vs {1})")]
    ModelMismatch(Model, Model),
    #[error("operands use different variable sets")]
    VariableMismatch,
    #[error("tropical natural division {0} - {1} leaves ℕ")]
    TropNatUnderflow(u64, u64),
    #[error("negative value {0} is not in the image of ℕ")]
    NegativeNatural(i64),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("value is not strictly positive: {0}")]
    NotPositive(String),
    #[error("integer overflow in tropical arithmetic")]
    Overflow,
    #[error("n-fold sum requires k >= 1")]
    ZeroFoldSum,
    #[error("cannot parse {model} value {text:?}: {reason}")]
    Parse {
        model: Model,
        text: String,
        reason: String,
    },
}

impl SemifieldError {
    pub fn kind(&self) -> &'static str {
        match self {
            SemifieldError::ModelMismatch(..) | SemifieldError::VariableMismatch => {
                "model_mismatch"
            }
            SemifieldError::TropNatUnderflow(..) | SemifieldError::NegativeNatural(_) => {
                "tropical_underflow"
            }
            SemifieldError::DivisionByZero | SemifieldError::NotPositive(_) => "not_positive",
            SemifieldError::Overflow => "overflow",
            SemifieldError::ZeroFoldSum => "zero_fold_sum",
            SemifieldError::Parse { .. } => "value_format",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    Rat,
    TropZ,
    TropN,
    Sym,
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Model::Rat => "rat",
            Model::TropZ => "tropz",
            Model::TropN => "tropn",
            Model::Sym => "sym",
        })
    }
}

impl FromStr for Model {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "rat" => Ok(Model::Rat),
            "tropz" => Ok(Model::TropZ),
            "tropn" => Ok(Model::TropN),
            "sym" => Ok(Model::Sym),
            _ => Err(format!(
                "unknown semifield model {s:?} (expected rat, tropz, tropn or sym)"
            )),
        }
    }
}

/// The operations every model supports.
///
/// All operations are fallible: tropical naturals have a partial division,
/// symbolic values carry a variable set that must agree, and the dynamic
/// [`SemifieldValue`] can mix models.
pub trait Semifield: Clone + fmt::Debug + PartialEq {
    fn add(&self, rhs: &Self) -> Result<Self, SemifieldError>;
    fn mul(&self, rhs: &Self) -> Result<Self, SemifieldError>;
    fn div(&self, rhs: &Self) -> Result<Self, SemifieldError>;

    /// Multiplicative identity of the same model (and variable set).
    fn one_like(&self) -> Self;

    fn model(&self) -> Model;

    /// `self` added to itself `k` times.
    fn nfold_sum(&self, k: u64) -> Result<Self, SemifieldError> {
        if k == 0 {
            return Err(SemifieldError::ZeroFoldSum);
        }
        // Double-and-add; valid because addition is associative.
        let mut acc: Option<Self> = None;
        let mut base = self.clone();
        let mut k = k;
        loop {
            if k & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.add(&base)?,
                });
            }
            k >>= 1;
            if k == 0 {
                break;
            }
            base = base.add(&base)?;
        }
        Ok(acc.expect("k >= 1"))
    }

    /// Integer power, `n >= 1`.
    fn pow(&self, n: u32) -> Result<Self, SemifieldError> {
        let mut acc = self.clone();
        for _ in 1..n.max(1) {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }
}

/// A value of any of the four models, tagged at run time.
#[derive(Clone, Debug, PartialEq)]
pub enum SemifieldValue {
    Rat(PosRat),
    TropZ(TropInt),
    TropN(TropNat),
    Sym(SymRat),
}

macro_rules! dispatch_binary {
    ($self:ident, $rhs:ident, $op:ident) => {
        match ($self, $rhs) {
            (SemifieldValue::Rat(a), SemifieldValue::Rat(b)) => a.$op(b).map(SemifieldValue::Rat),
            (SemifieldValue::TropZ(a), SemifieldValue::TropZ(b)) => {
                a.$op(b).map(SemifieldValue::TropZ)
            }
            (SemifieldValue::TropN(a), SemifieldValue::TropN(b)) => {
                a.$op(b).map(SemifieldValue::TropN)
            }
            (SemifieldValue::Sym(a), SemifieldValue::Sym(b)) => a.$op(b).map(SemifieldValue::Sym),
            (a, b) => Err(SemifieldError::ModelMismatch(a.model(), b.model())),
        }
    };
}

impl Semifield for SemifieldValue {
    fn add(&self, rhs: &Self) -> Result<Self, SemifieldError> {
        dispatch_binary!(self, rhs, add)
    }

    fn mul(&self, rhs: &Self) -> Result<Self, SemifieldError> {
        dispatch_binary!(self, rhs, mul)
    }

    fn div(&self, rhs: &Self) -> Result<Self, SemifieldError> {
        dispatch_binary!(self, rhs, div)
    }

    fn one_like(&self) -> Self {
        match self {
            SemifieldValue::Rat(a) => SemifieldValue::Rat(a.one_like()),
            SemifieldValue::TropZ(a) => SemifieldValue::TropZ(a.one_like()),
            SemifieldValue::TropN(a) => SemifieldValue::TropN(a.one_like()),
            SemifieldValue::Sym(a) => SemifieldValue::Sym(a.one_like()),
        }
    }

    fn model(&self) -> Model {
        match self {
            SemifieldValue::Rat(_) => Model::Rat,
            SemifieldValue::TropZ(_) => Model::TropZ,
            SemifieldValue::TropN(_) => Model::TropN,
            SemifieldValue::Sym(_) => Model::Sym,
        }
    }

    fn nfold_sum(&self, k: u64) -> Result<Self, SemifieldError> {
        match self {
            SemifieldValue::Rat(a) => a.nfold_sum(k).map(SemifieldValue::Rat),
            SemifieldValue::TropZ(a) => a.nfold_sum(k).map(SemifieldValue::TropZ),
            SemifieldValue::TropN(a) => a.nfold_sum(k).map(SemifieldValue::TropN),
            SemifieldValue::Sym(a) => a.nfold_sum(k).map(SemifieldValue::Sym),
        }
    }
}

impl SemifieldValue {
    /// Parses one coordinate. Symbolic values are parsed as expressions over
    /// `vars`; the other models ignore it.
    pub fn parse(model: Model, text: &str, vars: &Vars) -> Result<Self, SemifieldError> {
        let text = text.trim();
        let perr = |reason: String| SemifieldError::Parse {
            model,
            text: text.to_string(),
            reason,
        };
        match model {
            Model::Rat => PosRat::from_str(text).map(SemifieldValue::Rat),
            Model::TropZ => text
                .parse::<i64>()
                .map(|v| SemifieldValue::TropZ(TropInt(v)))
                .map_err(|e| perr(e.to_string())),
            Model::TropN => {
                let v = text.parse::<i64>().map_err(|e| perr(e.to_string()))?;
                iota_nat(v).map(SemifieldValue::TropN)
            }
            Model::Sym => {
                let expr = Expr::parse(text).map_err(|e| perr(e.to_string()))?;
                let value = expr
                    .eval_symbolic(vars, &Default::default())
                    .map_err(|e| perr(e.to_string()))?;
                Ok(SemifieldValue::Sym(value))
            }
        }
    }

    /// JSON form: tropical values as integers, the others as strings.
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            SemifieldValue::TropZ(v) => serde_json::json!(v.0),
            SemifieldValue::TropN(v) => serde_json::json!(v.0),
            other => serde_json::Value::String(other.to_string()),
        }
    }
}

impl fmt::Display for SemifieldValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SemifieldValue::Rat(v) => v.fmt(f),
            SemifieldValue::TropZ(v) => v.fmt(f),
            SemifieldValue::TropN(v) => v.fmt(f),
            SemifieldValue::Sym(v) => v.fmt(f),
        }
    }
}

/// Equality of symbolic values by cross-multiplication; errors on model or
/// variable-set mismatch instead of returning `false`.
pub fn sym_equal(a: &SemifieldValue, b: &SemifieldValue) -> Result<bool, SemifieldError> {
    match (a, b) {
        (SemifieldValue::Sym(x), SemifieldValue::Sym(y)) => x.sym_equal(y),
        (x, y) => Err(SemifieldError::ModelMismatch(x.model(), y.model())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generic_nfold_sum_uses_doubling() {
        let v = SemifieldValue::Rat(PosRat::from_int(3).unwrap());
        assert_eq!(v.nfold_sum(5).unwrap().to_string(), "15");
        assert_eq!(
            SemifieldValue::TropZ(TropInt(3)).nfold_sum(2).unwrap(),
            SemifieldValue::TropZ(TropInt(3))
        );
        assert_eq!(v.nfold_sum(0), Err(SemifieldError::ZeroFoldSum));
    }

    #[test]
    fn mixed_models_are_rejected() {
        let a = SemifieldValue::TropZ(TropInt(1));
        let b = SemifieldValue::TropN(TropNat(1));
        assert_eq!(
            a.add(&b),
            Err(SemifieldError::ModelMismatch(Model::TropZ, Model::TropN))
        );
        assert!(sym_equal(&a, &a).is_err());
    }

    #[test]
    fn parse_each_model() {
        let vars = Vars::new(["x", "y"]);
        assert_eq!(
            SemifieldValue::parse(Model::TropZ, "-4", &vars).unwrap(),
            SemifieldValue::TropZ(TropInt(-4))
        );
        assert!(SemifieldValue::parse(Model::TropN, "-1", &vars).is_err());
        assert_eq!(
            SemifieldValue::parse(Model::Rat, "6/4", &vars)
                .unwrap()
                .to_string(),
            "3/2"
        );
        let s = SemifieldValue::parse(Model::Sym, "x*y/(x+x)", &vars).unwrap();
        let t = SemifieldValue::parse(Model::Sym, "y/2", &vars).unwrap();
        assert!(sym_equal(&s, &t).unwrap());
    }
}
