//! On-disk results keyed by engine version and configuration.

use std::fs;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::config::RunConfig;
use crate::report::{Outcome, ENGINE_VERSION};

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn key(config: &RunConfig) -> String {
        let mut h = Sha256::new();
        h.update(ENGINE_VERSION.as_bytes());
        h.update(b"\n");
        h.update(serde_json::to_vec(config).expect("configs serialize"));
        hex::encode(h.finalize())
    }

    fn path(&self, config: &RunConfig) -> PathBuf {
        self.dir.join(format!("{}.json", Self::key(config)))
    }

    /// A missing or unreadable entry is a miss.
    pub fn load(&self, config: &RunConfig) -> Option<Outcome> {
        let bytes = fs::read(self.path(config)).ok()?;
        serde_json::from_slice(&bytes).ok()
    }

    pub fn store(&self, config: &RunConfig, outcome: &Outcome) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let path = self.path(config);
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        fs::write(&tmp, serde_json::to_vec_pretty(outcome)?)?;
        fs::rename(tmp, path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{Command, GroupKind};
    use treegroups::trees::Alphabet;

    fn config(order: usize) -> RunConfig {
        RunConfig {
            command: Command::Group {
                kind: GroupKind::T,
                order,
                alphabet: Alphabet::Strands(2),
                include_2jinf: false,
            },
            tree_cap: 1000,
            magnus_cap: 8,
        }
    }

    #[test]
    fn keys_follow_the_config() {
        assert_eq!(Cache::key(&config(1)), Cache::key(&config(1)));
        assert_ne!(Cache::key(&config(1)), Cache::key(&config(3)));
    }

    #[test]
    fn round_trip() {
        let dir = std::env::temp_dir().join(format!("treegroups-cache-{}", std::process::id()));
        let cache = Cache::new(&dir);
        let o = Outcome {
            results: serde_json::json!({"free_rank": 0}),
            passed: true,
            text: "x\n".into(),
        };
        assert!(cache.load(&config(1)).is_none());
        cache.store(&config(1), &o).unwrap();
        assert_eq!(cache.load(&config(1)), Some(o));
        std::fs::remove_dir_all(dir).unwrap();
    }
}
