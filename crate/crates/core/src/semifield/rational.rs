use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::{Model, Semifield, SemifieldError};

/// Strictly positive rational number.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PosRat(BigRational);

impl PosRat {
    pub fn new(value: BigRational) -> Result<Self, SemifieldError> {
        if value.is_positive() {
            Ok(PosRat(value))
        } else {
            Err(SemifieldError::NotPositive(value.to_string()))
        }
    }

    pub fn from_int(n: i64) -> Result<Self, SemifieldError> {
        PosRat::new(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_frac(num: i64, den: i64) -> Result<Self, SemifieldError> {
        if den == 0 {
            return Err(SemifieldError::DivisionByZero);
        }
        PosRat::new(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }
}

impl Semifield for PosRat {
    fn add(&self, rhs: &Self) -> Result<Self, SemifieldError> {
        Ok(PosRat(&self.0 + &rhs.0))
    }

    fn mul(&self, rhs: &Self) -> Result<Self, SemifieldError> {
        Ok(PosRat(&self.0 * &rhs.0))
    }

    fn div(&self, rhs: &Self) -> Result<Self, SemifieldError> {
        Ok(PosRat(&self.0 / &rhs.0))
    }

    fn one_like(&self) -> Self {
        PosRat(BigRational::one())
    }

    fn model(&self) -> Model {
        Model::Rat
    }

    fn nfold_sum(&self, k: u64) -> Result<Self, SemifieldError> {
        if k == 0 {
            return Err(SemifieldError::ZeroFoldSum);
        }
        Ok(PosRat(&self.0 * BigRational::from_integer(BigInt::from(k))))
    }
}

impl FromStr for PosRat {
    type Err = SemifieldError;

    /// Accepts `p`, `p/q`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let err = |reason: &str| SemifieldError::Parse {
            model: Model::Rat,
            text: s.to_string(),
            reason: reason.to_string(),
        };
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| err("bad numerator"))?;
        let den: BigInt = den.parse().map_err(|_| err("bad denominator"))?;
        if den == BigInt::from(0) {
            return Err(SemifieldError::DivisionByZero);
        }
        PosRat::new(BigRational::new(num, den))
    }
}

impl fmt::Display for PosRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> PosRat {
        PosRat::from_frac(n, d).unwrap()
    }

    #[test]
    fn ordinary_arithmetic() {
        assert_eq!(q(1, 1).div(&q(2, 1)).unwrap(), q(1, 2));
        assert_eq!(q(3, 1).nfold_sum(2).unwrap(), q(6, 1));
        assert!(PosRat::from_int(0).is_err());
        assert!("-1/2".parse::<PosRat>().is_err());
        assert_eq!("4/6".parse::<PosRat>().unwrap(), q(2, 3));
    }

    proptest! {
        #[test]
        fn field_axioms(a in 1i64..200, b in 1i64..200, c in 1i64..200, d in 1i64..50) {
            let (a, b, c) = (q(a, d), q(b, 1), q(c, d + 1));
            prop_assert_eq!(a.add(&b)?.add(&c)?, a.add(&b.add(&c)?)?);
            prop_assert_eq!(a.mul(&b)?.mul(&c)?, a.mul(&b.mul(&c)?)?);
            prop_assert_eq!(a.add(&b)?, b.add(&a)?);
            prop_assert_eq!(a.mul(&b.add(&c)?)?, a.mul(&b)?.add(&a.mul(&c)?)?);
            prop_assert_eq!(a.mul(&b)?.div(&b)?, a.clone());
            prop_assert_eq!(a.nfold_sum(2)?, a.add(&a)?);
        }
    }
}
