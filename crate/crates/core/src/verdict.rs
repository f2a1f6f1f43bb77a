//! Three-valued answer to "is the diagonal nef?".

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::exactnum::{decimal, ExactInt};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    NotNef,
    Nef,
    Open,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::NotNef => "NotNef",
            Status::Nef => "Nef",
            Status::Open => "Open",
        })
    }
}

/// Why a verdict was reached. Every `NotNef` reason carries something that
/// can be re-checked: a negative number or a named table entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Reason {
    /// `deg Delta^2 = deg c_n < 0`.
    NegativeSelfIntersection {
        #[serde(with = "decimal")]
        euler: ExactInt,
    },
    /// A finite cover of `P^n` of degree `d` with `deg c_n > (n+1) d`.
    ProjectionBound {
        #[serde(with = "decimal")]
        euler: ExactInt,
        #[serde(with = "decimal")]
        bound: ExactInt,
    },
    /// Two effective cycles of complementary dimension meeting negatively.
    NegativeEffectivePair {
        a: String,
        b: String,
        #[serde(with = "decimal")]
        value: ExactInt,
    },
    /// A named entry of the exception table without an intersection number
    /// (the K3 case).
    KnownException { entry: String },
    /// An extremal contraction of birational type exists.
    BirationalContraction,
    Homogeneous,
    FakeProjectiveSpace,
    /// Abelian varieties, in particular elliptic curves.
    GroupVariety,
    OpenQuestion { reference: String },
    /// None of the criteria applies; should never be produced on the
    /// classified families.
    Unclassified,
}

impl Reason {
    /// Short name of the criterion that fired, used in text reports.
    pub fn criterion(&self) -> &'static str {
        match self {
            Reason::NegativeSelfIntersection { .. } => {
                "negative self-intersection of the diagonal (deg c_n < 0)"
            }
            Reason::ProjectionBound { .. } => {
                "projection bound (finite cover of P^n of degree d with deg c_n > (n+1)d)"
            }
            Reason::NegativeEffectivePair { .. } => {
                "negative intersection of effective cycles (pseudoeffective but not nef)"
            }
            Reason::KnownException { .. } => "exception table",
            Reason::BirationalContraction => "extremal contraction of birational type",
            Reason::Homogeneous => "rational homogeneous variety",
            Reason::FakeProjectiveSpace => "fake projective space",
            Reason::GroupVariety => "group variety",
            Reason::OpenQuestion { .. } => "open question",
            Reason::Unclassified => "unclassified by the available criteria",
        }
    }

    /// Re-checks the internal consistency of a witness: the numbers it
    /// carries have the sign the criterion requires.
    pub fn witness_is_consistent(&self) -> bool {
        match self {
            Reason::NegativeSelfIntersection { euler } => euler.is_negative(),
            Reason::ProjectionBound { euler, bound } => euler > bound,
            Reason::NegativeEffectivePair { value, .. } => value.is_negative(),
            Reason::KnownException { entry } => !entry.is_empty(),
            _ => true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub status: Status,
    pub reason: Reason,
    pub detail: String,
}

impl Verdict {
    pub fn nef(reason: Reason, detail: impl Into<String>) -> Self {
        Self { status: Status::Nef, reason, detail: detail.into() }
    }

    pub fn not_nef(reason: Reason, detail: impl Into<String>) -> Self {
        Self { status: Status::NotNef, reason, detail: detail.into() }
    }

    pub fn open(reason: Reason, detail: impl Into<String>) -> Self {
        Self { status: Status::Open, reason, detail: detail.into() }
    }

    pub fn negative_self_intersection(euler: BigInt, detail: impl Into<String>) -> Self {
        Self::not_nef(Reason::NegativeSelfIntersection { euler }, detail)
    }

    pub fn is_unclassified(&self) -> bool {
        self.reason == Reason::Unclassified
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.status, self.reason.criterion())?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witnesses_check_their_signs() {
        let ok = Reason::ProjectionBound { euler: 27.into(), bound: 15.into() };
        assert!(ok.witness_is_consistent());
        let bad = Reason::ProjectionBound { euler: 12.into(), bound: 20.into() };
        assert!(!bad.witness_is_consistent());
        assert!(!Reason::NegativeSelfIntersection { euler: 0.into() }.witness_is_consistent());
    }

    #[test]
    fn json_shape_is_stable() {
        let v = Verdict::negative_self_intersection((-56).into(), "quartic threefold");
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(
            json,
            r#"{"status":"not_nef","reason":{"kind":"negative_self_intersection","euler":"-56"},"detail":"quartic threefold"}"#
        );
        let back: Verdict = serde_json::from_str(&json).unwrap();
        assert_eq!(back, v);
    }
}
