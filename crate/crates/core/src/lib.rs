//! Exact computation of blocking-set irredundance on small graphs.
//!
//! Every vertex subset is a [`VertexSet`] (one `u64`), so graphs have at most
//! 64 vertices; the exhaustive searches are guarded by a [`Budget`] far below
//! that.
//!
//! The engine covers five parameters, named by [`ClosureRule`]: standard,
//! PSD and skew zero forcing, domination, and vertex cover. For each it can
//! enumerate blocking families, evaluate the closure operator, compute the
//! chain `xir <= X <= upper X <= XIR` ([`irredundance::report`]), and build
//! token addition/removal reconfiguration graphs ([`tar`]). The [`verify`]
//! module runs the exhaustive property suites.

pub mod blocking;
pub mod closure;
pub mod error;
pub mod family;
pub mod fixtures;
pub mod graph;
pub mod graph6;
pub mod irredundance;
pub mod tar;
pub mod trees;
pub mod verify;
pub mod vertex_set;

pub use blocking::{BlockingFamily, Provenance};
pub use closure::ClosureRule;
pub use error::{Error, Result};
pub use family::FamilySpec;
pub use graph::Graph;
pub use graph6::{parse_graph6, to_graph6};
pub use irredundance::{ChainReport, ParameterReport, Witnessed};
pub use vertex_set::VertexSet;

/// Version tag carried by every JSON document the engine emits.
pub const SCHEMA_VERSION: u32 = 1;

/// Order guard for operations that scan all `2^n` vertex subsets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_order: usize,
}

impl Budget {
    pub const DEFAULT_MAX_ORDER: usize = 16;

    pub fn new(max_order: usize) -> Budget {
        Budget { max_order }
    }

    pub fn check(self, n: usize) -> Result<()> {
        // One bit per subset is stored in several tables, so 2^n must fit.
        let hard = self.max_order.min(30);
        if n > hard {
            Err(Error::OrderBudgetExceeded { n, budget: hard })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(Budget::DEFAULT_MAX_ORDER)
    }
}
