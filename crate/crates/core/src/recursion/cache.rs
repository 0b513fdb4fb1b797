use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::engine::Engine;
use super::result::KResult;
use crate::error::{Error, Result};

/// Bumped whenever the recursion could produce different values or terms.
pub const ENGINE_VERSION: &str = "coxeter-euler-recursion/1";

/// Environment variable overriding the cache location.
pub const CACHE_ENV: &str = "COXETER_CACHE";

#[derive(Debug, Serialize, Deserialize)]
struct CacheFile {
    engine_version: String,
    entries: Vec<KResult>,
}

/// Outcome of reading a cache file.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CacheStatus {
    Missing,
    Loaded(usize),
    /// Written by a different engine version; ignored.
    Stale,
}

/// `$COXETER_CACHE` if set, otherwise `explicit`.
pub fn resolve_cache_path(explicit: Option<&Path>) -> Option<PathBuf> {
    match std::env::var_os(CACHE_ENV) {
        Some(p) if !p.is_empty() => Some(PathBuf::from(p)),
        _ => explicit.map(Path::to_path_buf),
    }
}

/// Engine preloaded from `path`. Unreadable or malformed files are errors.
pub fn load_engine(path: &Path) -> Result<(Engine, CacheStatus)> {
    if !path.exists() {
        return Ok((Engine::new(), CacheStatus::Missing));
    }
    let text = fs::read_to_string(path).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
    let file: CacheFile =
        serde_json::from_str(&text).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
    if file.engine_version != ENGINE_VERSION {
        return Ok((Engine::new(), CacheStatus::Stale));
    }
    let n = file.entries.len();
    Ok((Engine::with_entries(file.entries), CacheStatus::Loaded(n)))
}

pub fn save_engine(engine: &Engine, path: &Path) -> Result<()> {
    let file = CacheFile { engine_version: ENGINE_VERSION.to_string(), entries: engine.entries() };
    let text = serde_json::to_string_pretty(&file).map_err(|e| Error::Cache(e.to_string()))?;
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| Error::Cache(format!("{}: {e}", dir.display())))?;
    }
    fs::write(path, text).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))
}
