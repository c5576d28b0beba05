use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Acceptance semantics for tree automata.
///
/// A tree is accepted when some run satisfies the condition:
/// - `Classical`: every branch is accepting.
/// - `RejFin`: finitely many branches are rejecting.
/// - `RejCount`: countably many branches are rejecting.
/// - `AccInf`: infinitely many branches are accepting.
/// - `AccUnc`: uncountably many branches are accepting.
/// - `Large`: the set of accepting branches is co-meagre.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Semantics {
    Classical,
    RejFin,
    RejCount,
    AccInf,
    AccUnc,
    Large,
}

impl Semantics {
    pub const ALL: [Semantics; 6] = [
        Semantics::Classical,
        Semantics::RejFin,
        Semantics::RejCount,
        Semantics::AccInf,
        Semantics::AccUnc,
        Semantics::Large,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Semantics::Classical => "classical",
            Semantics::RejFin => "rej-fin",
            Semantics::RejCount => "rej-count",
            Semantics::AccInf => "acc-inf",
            Semantics::AccUnc => "acc-unc",
            Semantics::Large => "large",
        }
    }

    /// Pairs `(weaker, stronger)` such that membership under `weaker`
    /// implies membership under `stronger`.
    pub const IMPLICATIONS: [(Semantics, Semantics); 5] = [
        (Semantics::Classical, Semantics::RejFin),
        (Semantics::RejFin, Semantics::RejCount),
        (Semantics::RejCount, Semantics::Large),
        (Semantics::RejCount, Semantics::AccUnc),
        (Semantics::AccUnc, Semantics::AccInf),
    ];
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown semantics `{0}` (expected classical, rej-fin, rej-count, acc-inf, acc-unc or large)")]
pub struct UnknownSemantics(pub String);

impl FromStr for Semantics {
    type Err = UnknownSemantics;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Semantics::ALL
            .into_iter()
            .find(|x| x.as_str() == s)
            .ok_or_else(|| UnknownSemantics(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spellings_round_trip() {
        for s in Semantics::ALL {
            assert_eq!(s.to_string().parse::<Semantics>().unwrap(), s);
        }
        assert!("rejfin".parse::<Semantics>().is_err());
    }
}
