//! Power-commutator presentations of finite p-groups: collection,
//! consistency, subgroups, series, quotients and products.

mod collect;
mod consistency;
pub mod format;
mod presentation;
mod product;
mod quotient;
mod series;
mod subgroup;
mod table;

pub(crate) use collect::{Collector, TailSink};
pub(crate) use consistency::evaluate_overlap;
pub(crate) use subgroup::mod_inverse;

pub use consistency::{Overlap, Violation};
pub use format::{parse_pcp, render_pcp};
pub use presentation::{is_prime, PcElement, PcPresentation, Relation};
pub use quotient::Quotient;
pub use subgroup::SubgroupBasis;
pub use table::{pcp_from_multiplication, MultiplicationTable, TABLE_CAP};
