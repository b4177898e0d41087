use crate::error::{Error, Result};

/// Environment variable that overrides [`Limits::max_vertices`].
pub const MAX_VERTICES_ENV: &str = "POLYCLAR_MAX_VERTICES";

/// Size guards for the exponential-time operations.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest vertex count accepted by enumerating operations.
    pub max_vertices: usize,
    /// Largest narrow-side width (in cells) accepted by the profile counter.
    pub max_profile_width: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self { max_vertices: 64, max_profile_width: 12 }
    }
}

impl Limits {
    /// Defaults, with `POLYCLAR_MAX_VERTICES` applied when set to a number.
    pub fn from_env() -> Self {
        let mut limits = Self::default();
        if let Some(n) = std::env::var(MAX_VERTICES_ENV).ok().and_then(|v| v.trim().parse().ok()) {
            limits.max_vertices = n;
        }
        limits
    }

    pub fn check_vertices(&self, vertices: usize) -> Result<()> {
        if vertices > self.max_vertices {
            Err(Error::TooLarge { vertices, limit: self.max_vertices })
        } else {
            Ok(())
        }
    }
}
