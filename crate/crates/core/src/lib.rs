//! Exact-arithmetic homology for finite simplicial complexes and group
//! presentations, with homological acyclicity verdicts.
//!
//! ```
//! use acyclo_core::{analyze_presentation, presentation, simplicial};
//!
//! // The minimal 7-vertex torus has H_1 = Z^2 and H_2 = Z.
//! let chain = simplicial::torus7().chain_complex();
//! assert_eq!(chain.homology(1).betti, 2);
//! assert_eq!(chain.homology(2).betti, 1);
//!
//! // A group presented by a^5 = b^3 = (ab)^2 is perfect, and its
//! // presentation complex is homologically acyclic.
//! let p = presentation::hatcher();
//! assert!(p.is_perfect());
//! assert!(analyze_presentation(&p).max_k.is_infinite());
//! ```

pub mod acyclicity;
pub mod chain;
pub mod error;
pub mod linalg;
pub mod perm;
pub mod pi1;
pub mod presentation;
mod serial;
pub mod simplicial;

pub use acyclicity::{analyze_complex, analyze_presentation, k_acyclic, AcyclicityReport, MaxK};
pub use chain::{ChainComplex, HomologyGroup};
pub use error::{Error, Result};
pub use linalg::{IntMatrix, SnfDecomposition};
pub use perm::{FiniteGroup, Permutation};
pub use pi1::Pi1Presentation;
pub use presentation::{AbelianizationResult, Presentation, Word};
pub use simplicial::SimplicialComplex;

#[cfg(test)]
mod thread_safety {
    // All engine values are immutable after construction; parallel batch
    // analysis relies on them being shareable.
    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn engine_values_are_shareable() {
        assert_send_sync::<super::IntMatrix>();
        assert_send_sync::<super::SnfDecomposition>();
        assert_send_sync::<super::ChainComplex>();
        assert_send_sync::<super::HomologyGroup>();
        assert_send_sync::<super::SimplicialComplex>();
        assert_send_sync::<super::Presentation>();
        assert_send_sync::<super::Word>();
        assert_send_sync::<super::AbelianizationResult>();
        assert_send_sync::<super::Permutation>();
        assert_send_sync::<super::FiniteGroup>();
        assert_send_sync::<super::Pi1Presentation>();
        assert_send_sync::<super::AcyclicityReport>();
        assert_send_sync::<super::Error>();
    }
}
