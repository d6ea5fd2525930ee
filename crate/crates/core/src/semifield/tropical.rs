use std::fmt;

use super::{Model, Semifield, SemifieldError};

/// Tropical integer: `add = min`, `mul = +`, `div = -`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TropInt(pub i64);

/// Tropical natural number. Closed under `add`, `mul` and `a / (a + b)`, but
/// general division fails when the difference is negative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TropNat(pub u64);

/// The coercion ℤ → K for tropical integers.
pub fn iota(n: i64) -> TropInt {
    TropInt(n)
}

pub fn iota_inv(v: TropInt) -> i64 {
    v.0
}

/// The coercion ℕ → K; negative input is outside the image.
pub fn iota_nat(n: i64) -> Result<TropNat, SemifieldError> {
    u64::try_from(n)
        .map(TropNat)
        .map_err(|_| SemifieldError::NegativeNatural(n))
}

impl Semifield for TropInt {
    fn add(&self, rhs: &Self) -> Result<Self, SemifieldError> {
        Ok(TropInt(self.0.min(rhs.0)))
    }

    fn mul(&self, rhs: &Self) -> Result<Self, SemifieldError> {
        self.0
            .checked_add(rhs.0)
            .map(TropInt)
            .ok_or(SemifieldError::Overflow)
    }

    fn div(&self, rhs: &Self) -> Result<Self, SemifieldError> {
        self.0
            .checked_sub(rhs.0)
            .map(TropInt)
            .ok_or(SemifieldError::Overflow)
    }

    fn one_like(&self) -> Self {
        TropInt(0)
    }

    fn model(&self) -> Model {
        Model::TropZ
    }

    fn nfold_sum(&self, k: u64) -> Result<Self, SemifieldError> {
        if k == 0 {
            return Err(SemifieldError::ZeroFoldSum);
        }
        Ok(*self)
    }
}

impl Semifield for TropNat {
    fn add(&self, rhs: &Self) -> Result<Self, SemifieldError> {
        Ok(TropNat(self.0.min(rhs.0)))
    }

    fn mul(&self, rhs: &Self) -> Result<Self, SemifieldError> {
        self.0
            .checked_add(rhs.0)
            .map(TropNat)
            .ok_or(SemifieldError::Overflow)
    }

    fn div(&self, rhs: &Self) -> Result<Self, SemifieldError> {
        self.0
            .checked_sub(rhs.0)
            .map(TropNat)
            .ok_or(SemifieldError::TropNatUnderflow(self.0, rhs.0))
    }

    fn one_like(&self) -> Self {
        TropNat(0)
    }

    fn model(&self) -> Model {
        Model::TropN
    }

    fn nfold_sum(&self, k: u64) -> Result<Self, SemifieldError> {
        if k == 0 {
            return Err(SemifieldError::ZeroFoldSum);
        }
        Ok(*self)
    }
}

impl fmt::Display for TropInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for TropNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn min_plus_minus() {
        let (a, b) = (TropInt(3), TropInt(5));
        assert_eq!(a.add(&b).unwrap(), TropInt(3));
        assert_eq!(a.mul(&b).unwrap(), TropInt(8));
        assert_eq!(a.div(&b).unwrap(), TropInt(-2));
    }

    #[test]
    fn nat_division_is_partial() {
        assert_eq!(TropNat(5).div(&TropNat(2)).unwrap(), TropNat(3));
        assert_eq!(
            TropNat(2).div(&TropNat(5)),
            Err(SemifieldError::TropNatUnderflow(2, 5))
        );
    }

    #[test]
    fn iota_roundtrip_and_range() {
        assert_eq!(iota(0), TropInt(0));
        assert_eq!(iota_inv(iota(7)), 7);
        assert_eq!(iota_nat(-1), Err(SemifieldError::NegativeNatural(-1)));
    }

    #[test]
    fn overflow_is_reported() {
        assert_eq!(
            TropInt(i64::MAX).mul(&TropInt(1)),
            Err(SemifieldError::Overflow)
        );
    }

    proptest! {
        #[test]
        fn tropical_axioms(a in -1000i64..1000, b in -1000i64..1000, c in -1000i64..1000) {
            let (a, b, c) = (TropInt(a), TropInt(b), TropInt(c));
            prop_assert_eq!(a.add(&b)?.add(&c)?, a.add(&b.add(&c)?)?);
            prop_assert_eq!(a.mul(&b)?, b.mul(&a)?);
            prop_assert_eq!(a.mul(&b.add(&c)?)?, a.mul(&b)?.add(&a.mul(&c)?)?);
            prop_assert_eq!(a.mul(&b)?.div(&b)?, a);
            prop_assert_eq!(a.nfold_sum(2)?, a);
        }

        // a / (a + b) stays in ℕ: a - min(a, b) >= 0.
        #[test]
        fn nat_closed_under_ratio_of_sum(a in 0u64..10_000, b in 0u64..10_000) {
            let (a, b) = (TropNat(a), TropNat(b));
            prop_assert!(a.div(&a.add(&b)?).is_ok());
        }
    }
}
