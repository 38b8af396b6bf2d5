//! Library side of the `schur` command: JSON schemas, human tables and the
//! verification campaign.

pub mod campaign;
pub mod exit;
pub mod json;
pub mod table;

pub use campaign::{run_campaign, CampaignOptions, CheckRecord, Summary, Verdict, VerificationReport};
pub use exit::ExitCode;
