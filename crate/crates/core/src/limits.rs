//! Enumeration caps.
//!
//! Everything in this crate enumerates exponentially many objects, so the
//! ground set size is capped. The cap can be raised through the
//! `CROSSCUBE_MAX_ELEMENTS` environment variable (never above 64).

use crate::error::{Error, Result};
use crate::set::MAX_LABELS;

pub const ELEMENT_CAP_ENV: &str = "CROSSCUBE_MAX_ELEMENTS";
pub const DEFAULT_ELEMENT_CAP: usize = 20;

/// Maximum number of faces a simplicial complex may enumerate.
pub const SIMPLICIAL_FACE_CAP: u128 = 1 << 20;

/// Maximum number of faces a cubical complex may enumerate.
pub const CUBICAL_FACE_CAP: u128 = 1 << 22;

/// Maximum PIP size accepted by the isomorphism search.
pub const ISOMORPHISM_CAP: usize = 12;

pub fn element_cap() -> usize {
    std::env::var(ELEMENT_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map(|c| c.min(MAX_LABELS))
        .unwrap_or(DEFAULT_ELEMENT_CAP)
}

pub(crate) fn check_elements(what: &'static str, n: usize) -> Result<()> {
    let cap = element_cap();
    if n > cap {
        return Err(Error::CapExceeded {
            what,
            size: n as u128,
            cap: cap as u128,
        });
    }
    Ok(())
}
