//! Content-addressed on-disk cache for expensive symbolic results.
//!
//! Each entry is a text file named by the SHA-256 of its key. The file holds
//! the key, a SHA-256 of the payload and the payload itself; anything that
//! fails to verify is treated as a miss and recomputed.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

/// Bumped whenever a cached computation changes its output.
pub const ENGINE_VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "+1");

/// Environment variable that overrides the default cache directory.
pub const CACHE_DIR_ENV: &str = "BINFORM_CACHE_DIR";

const MAGIC: &str = "binform-cache 1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CacheKey {
    pub op: String,
    pub params: String,
}

impl CacheKey {
    pub fn new(op: &str, params: &str) -> CacheKey {
        CacheKey { op: op.to_string(), params: params.to_string() }
    }

    /// `op=...;params=...;engine=...`, the string that is hashed into the file name.
    pub fn canonical(&self) -> String {
        format!("op={};params={};engine={}", self.op, self.params, ENGINE_VERSION)
    }
}

pub fn sha256_hex(data: &[u8]) -> String {
    format!("{:x}", Sha256::digest(data))
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn open(dir: impl Into<PathBuf>) -> io::Result<Cache> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(Cache { dir })
    }

    /// The override variable if set, otherwise `binform` under the platform cache directory.
    pub fn default_dir() -> Option<PathBuf> {
        match std::env::var_os(CACHE_DIR_ENV) {
            Some(d) if !d.is_empty() => Some(PathBuf::from(d)),
            _ => dirs::cache_dir().map(|d| d.join("binform")),
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, key: &CacheKey) -> PathBuf {
        self.dir.join(format!("{}.txt", sha256_hex(key.canonical().as_bytes())))
    }

    /// The stored payload, or `None` if absent, for another key, or corrupted.
    pub fn load(&self, key: &CacheKey) -> Option<String> {
        let text = fs::read_to_string(self.path_for(key)).ok()?;
        let mut parts = text.splitn(4, '\n');
        if parts.next()? != MAGIC {
            return None;
        }
        if parts.next()?.strip_prefix("key ")? != key.canonical() {
            return None;
        }
        let digest = parts.next()?.strip_prefix("sha256 ")?.to_string();
        let payload = parts.next()?;
        (sha256_hex(payload.as_bytes()) == digest).then(|| payload.to_string())
    }

    /// Writes through a temporary file so readers never see a partial entry.
    pub fn store(&self, key: &CacheKey, payload: &str) -> io::Result<()> {
        let path = self.path_for(key);
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        {
            let mut f = fs::File::create(&tmp)?;
            writeln!(f, "{}", MAGIC)?;
            writeln!(f, "key {}", key.canonical())?;
            writeln!(f, "sha256 {}", sha256_hex(payload.as_bytes()))?;
            f.write_all(payload.as_bytes())?;
            f.sync_all()?;
        }
        fs::rename(&tmp, &path)
    }
}
