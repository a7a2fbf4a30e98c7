//! Homological acyclicity verdicts.
//!
//! Indexing convention, fixed once for the whole tool: an object is
//! `k`-acyclic when its suspension is `k`-connected, which unwinds to
//!
//! - `k = -1`: always;
//! - `k = 0`: the object is nonempty;
//! - `k >= 1`: the object is connected and its reduced homology vanishes in
//!   degrees `1 ..= k-1`.
//!
//! Under this reading, 0-acyclic means inhabited, 1-acyclic means connected,
//! and 2-acyclic means connected with perfect fundamental group. An
//! alternative literal reading ("reduced homology vanishes up to degree k",
//! see [`AcyclicityReport::is_k_acyclic_h_indexed`]) is off by one against
//! those statements; it is exposed for comparison but not used for verdicts.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::chain::{ChainComplex, HomologyGroup};
use crate::presentation::Presentation;
use crate::simplicial::SimplicialComplex;

/// Caveat attached to every report: these are homology-level verdicts, and
/// "homologically acyclic implies acyclic" needs Whitehead's principle.
pub const HOMOLOGICAL_CAVEAT: &str = "verdicts are homological: homological acyclicity \
implies acyclicity of the underlying space only under Whitehead's principle";

/// Largest `k` for which an object is `k`-acyclic: a finite rung or
/// infinity (homologically acyclic).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MaxK {
    Finite(i64),
    Infinite,
}

impl MaxK {
    pub fn at_least(&self, k: i64) -> bool {
        match self {
            MaxK::Infinite => true,
            MaxK::Finite(m) => *m >= k,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, MaxK::Infinite)
    }

    /// Bump by a suspension step; infinity is absorbing.
    pub fn plus(&self, n: i64) -> MaxK {
        match self {
            MaxK::Infinite => MaxK::Infinite,
            MaxK::Finite(m) => MaxK::Finite(m + n),
        }
    }
}

impl fmt::Display for MaxK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MaxK::Finite(k) => write!(f, "{k}"),
            MaxK::Infinite => write!(f, "infinity"),
        }
    }
}

impl Serialize for MaxK {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            MaxK::Finite(k) => serializer.serialize_i64(*k),
            MaxK::Infinite => serializer.serialize_str("infinity"),
        }
    }
}

/// Per-degree reduced homology plus the acyclicity ladder verdicts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AcyclicityReport {
    pub nonempty: bool,
    pub connected: bool,
    pub reduced_homology: BTreeMap<i64, HomologyGroup>,
    pub max_k: MaxK,
    /// Whether reduced H_1 vanishes; for a presentation complex this says
    /// exactly that the presented group is perfect.
    pub perfect_pi1_h1: bool,
    pub caveat: &'static str,
}

impl AcyclicityReport {
    fn from_chain(chain: &ChainComplex, nonempty: bool, connected: bool) -> AcyclicityReport {
        let top = chain.top_degree().unwrap_or(-1);
        let reduced_homology: BTreeMap<i64, HomologyGroup> =
            (-1..=top.max(0)).map(|d| (d, chain.homology(d))).collect();
        let h1_zero = reduced_homology
            .get(&1)
            .map(HomologyGroup::is_zero)
            .unwrap_or(true);

        let max_k = if !nonempty {
            MaxK::Finite(-1)
        } else if !connected {
            MaxK::Finite(0)
        } else {
            match reduced_homology
                .iter()
                .filter(|(d, g)| **d >= 1 && !g.is_zero())
                .map(|(d, _)| *d)
                .min()
            {
                // Everything above the stored top degree vanishes: the
                // complex is finite, so "no nonzero group" means acyclic.
                None => MaxK::Infinite,
                Some(first_nonzero) => MaxK::Finite(first_nonzero),
            }
        };

        AcyclicityReport {
            nonempty,
            connected,
            reduced_homology,
            max_k,
            perfect_pi1_h1: h1_zero,
            caveat: HOMOLOGICAL_CAVEAT,
        }
    }

    /// `k`-acyclicity verdict under the suspension-connectivity convention.
    pub fn is_k_acyclic(&self, k: i64) -> bool {
        if k <= -1 {
            return true;
        }
        self.max_k.at_least(k)
    }

    /// The literal "reduced homology vanishes in degrees <= k" predicate
    /// (requires nonemptiness). Off by one against the main convention:
    /// two points are 0-acyclic but fail this at k = 0.
    pub fn is_k_acyclic_h_indexed(&self, k: i64) -> bool {
        self.nonempty
            && self
                .reduced_homology
                .iter()
                .all(|(d, g)| *d > k || g.is_zero())
    }

    /// Largest `k >= -1` satisfying [`Self::is_k_acyclic_h_indexed`], if any.
    pub fn max_k_h_indexed(&self) -> Option<MaxK> {
        if !self.nonempty {
            return None;
        }
        match self
            .reduced_homology
            .iter()
            .filter(|(_, g)| !g.is_zero())
            .map(|(d, _)| *d)
            .min()
        {
            None => Some(MaxK::Infinite),
            Some(first_nonzero) if first_nonzero > -1 => Some(MaxK::Finite(first_nonzero - 1)),
            Some(_) => None,
        }
    }
}

impl Serialize for AcyclicityReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("AcyclicityReport", 5)?;
        s.serialize_field("nonempty", &self.nonempty)?;
        s.serialize_field("connected", &self.connected)?;
        let homology: BTreeMap<String, &HomologyGroup> = self
            .reduced_homology
            .iter()
            .map(|(d, g)| (d.to_string(), g))
            .collect();
        s.serialize_field("homology", &homology)?;
        s.serialize_field("max_k", &self.max_k)?;
        s.serialize_field("caveat", &self.caveat)?;
        s.end()
    }
}

/// Full acyclicity report for a simplicial complex.
pub fn analyze_complex(complex: &SimplicialComplex) -> AcyclicityReport {
    AcyclicityReport::from_chain(
        &complex.chain_complex(),
        complex.is_nonempty(),
        complex.is_connected(),
    )
}

/// Report over the presentation 2-complex; `perfect_pi1_h1` then coincides
/// with perfectness of the presented group.
pub fn analyze_presentation(presentation: &Presentation) -> AcyclicityReport {
    AcyclicityReport::from_chain(&presentation.presentation_complex_chain(), true, true)
}

/// Convenience ladder predicate for complexes (`k >= -1`; lower `k` is
/// trivially true).
pub fn k_acyclic(complex: &SimplicialComplex, k: i64) -> bool {
    analyze_complex(complex).is_k_acyclic(k)
}
