//! Library side of the `steiner` command: analysis reports, scans,
//! reproducible scenarios and plotting.

pub mod analysis;
pub mod format;
pub mod scan;
pub mod scenarios;
pub mod svg;

/// Process exit codes.
pub mod exit {
    /// Every requested check passed.
    pub const OK: u8 = 0;
    /// A check or scenario target failed.
    pub const CHECK_FAILED: u8 = 1;
    /// Bad arguments, unparseable input or a numeric failure.
    pub const ERROR: u8 = 2;
}
