//! On-disk cache of expensive artifacts, one JSON file per (parameters, kind).
//!
//! Files carry a SHA-256 of their payload; anything that fails to parse or to
//! match is ignored and rebuilt. Writes go to a temporary file that is then renamed.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::RwLock;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::Result;
use crate::hecke::Params;

static CACHE_DIR: RwLock<Option<PathBuf>> = RwLock::new(None);

/// Sets (or clears) the directory used by [`load`] and [`store`].
pub fn set_cache_dir(dir: Option<PathBuf>) {
    *CACHE_DIR.write().expect("cache lock") = dir;
}

pub fn cache_dir() -> Option<PathBuf> {
    CACHE_DIR.read().expect("cache lock").clone()
}

#[derive(Serialize, Deserialize)]
struct Envelope<T> {
    kind: String,
    params: Params,
    sha256: String,
    payload: T,
}

fn path_for(dir: &Path, params: &Params, kind: &str) -> PathBuf {
    dir.join(format!("{kind}-{}.json", params.key()))
}

fn digest<T: Serialize>(payload: &T) -> Result<String> {
    Ok(hex::encode(Sha256::digest(serde_json::to_vec(payload)?)))
}

/// Reads a cached artifact, or `None` when absent, unreadable or corrupted.
pub fn load<T: Serialize + DeserializeOwned>(params: &Params, kind: &str) -> Option<T> {
    let dir = cache_dir()?;
    let path = path_for(&dir, params, kind);
    let bytes = fs::read(&path).ok()?;
    let env: Envelope<T> = match serde_json::from_slice(&bytes) {
        Ok(e) => e,
        Err(e) => {
            log::warn!("ignoring unreadable cache file {}: {e}", path.display());
            return None;
        }
    };
    if env.kind != kind || &env.params != params || digest(&env.payload).ok()? != env.sha256 {
        log::warn!("ignoring stale or corrupted cache file {}", path.display());
        return None;
    }
    Some(env.payload)
}

/// Writes an artifact atomically; a no-op when no cache directory is set.
pub fn store<T: Serialize>(params: &Params, kind: &str, payload: &T) -> Result<()> {
    let Some(dir) = cache_dir() else {
        return Ok(());
    };
    fs::create_dir_all(&dir)?;
    let env = Envelope { kind: kind.to_string(), params: params.clone(), sha256: digest(&payload)?, payload };
    let path = path_for(&dir, params, kind);
    let tmp = dir.join(format!(".{kind}-{}.{}.tmp", params.key(), std::process::id()));
    fs::write(&tmp, serde_json::to_vec(&env)?)?;
    fs::rename(&tmp, &path)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::{Generic, Preset};

    #[test]
    fn round_trip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let p = Generic.params(1, 2).unwrap();
        // the cache directory is process-global; this is the only test that sets it
        set_cache_dir(Some(dir.path().to_path_buf()));
        store(&p, "probe", &vec![1u32, 2, 3]).unwrap();
        assert_eq!(load::<Vec<u32>>(&p, "probe"), Some(vec![1, 2, 3]));
        assert_eq!(load::<Vec<u32>>(&p.with_n(3), "probe"), None);
        let path = path_for(dir.path(), &p, "probe");
        let text = fs::read_to_string(&path).unwrap().replace("[1,2,3]", "[1,2,4]");
        fs::write(&path, text).unwrap();
        assert_eq!(load::<Vec<u32>>(&p, "probe"), None);
        fs::write(&path, "not json").unwrap();
        assert_eq!(load::<Vec<u32>>(&p, "probe"), None);
        set_cache_dir(None);
    }
}
