//! On-disk cache of minimal resolutions, keyed by a SHA-256 of the
//! algebra, the module and the bounds. Entries are re-checked on load.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use steenrod_core::f2linalg::F2Vector;
use steenrod_core::module_cat::{
    check_resolution, minimal_free_resolution, FinModule, FiniteAlgebra, ResolutionStage, ResolutionWindow,
};

pub const FORMAT_TAG: &str = "steenrod-resolution-v1";
pub const ENV_VAR: &str = "STEENROD_CACHE_DIR";

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

#[derive(Serialize, Deserialize)]
struct StageFile {
    gens: Vec<u32>,
    d: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct ResolutionFile {
    format: String,
    algebra: String,
    module: String,
    s_max: u32,
    t_max: u32,
    stages: Vec<StageFile>,
}

/// Where a lookup came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    Hit,
    Computed,
    /// Entry present but unreadable or invalid; recomputed and overwritten.
    Replaced,
}

fn bits(v: &F2Vector) -> String {
    (0..v.len()).map(|i| if v.get(i) { '1' } else { '0' }).collect()
}

fn from_bits(s: &str) -> Option<F2Vector> {
    let mut out = Vec::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '0' => out.push(false),
            '1' => out.push(true),
            _ => return None,
        }
    }
    Some(F2Vector::from_bits(out))
}

impl Cache {
    /// `explicit`, else the environment override, else the user cache directory.
    pub fn locate(explicit: Option<&Path>) -> Cache {
        let dir = if let Some(p) = explicit {
            p.to_path_buf()
        } else if let Some(p) = std::env::var_os(ENV_VAR) {
            PathBuf::from(p)
        } else if let Some(p) = std::env::var_os("XDG_CACHE_HOME") {
            PathBuf::from(p).join("steenrod")
        } else if let Some(h) = std::env::var_os("HOME") {
            PathBuf::from(h).join(".cache").join("steenrod")
        } else {
            PathBuf::from(".steenrod-cache")
        };
        Cache { dir }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn key(alg: &FiniteAlgebra, m: &FinModule, s_max: u32, t_max: u32) -> String {
        let mut h = Sha256::new();
        h.update(FORMAT_TAG.as_bytes());
        h.update([0]);
        h.update(alg.name().as_bytes());
        h.update([0]);
        h.update(format!("{:?}", m).as_bytes());
        h.update([0]);
        h.update(s_max.to_le_bytes());
        h.update(t_max.to_le_bytes());
        h.finalize().iter().map(|b| format!("{:02x}", b)).collect()
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{}.json", key))
    }

    fn load(&self, key: &str, alg: &FiniteAlgebra, m: &FinModule) -> Option<ResolutionWindow> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        let f: ResolutionFile = serde_json::from_str(&text).ok()?;
        if f.format != FORMAT_TAG || f.algebra != alg.name() {
            return None;
        }
        let mut stages = Vec::with_capacity(f.stages.len());
        for s in f.stages {
            let d = s.d.iter().map(|b| from_bits(b)).collect::<Option<Vec<_>>>()?;
            stages.push(ResolutionStage { gens: s.gens, d });
        }
        let r = ResolutionWindow { algebra: f.algebra, module: f.module, s_max: f.s_max, t_max: f.t_max, stages };
        check_resolution(alg, m, &r).ok()?;
        Some(r)
    }

    fn store(&self, key: &str, r: &ResolutionWindow) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let f = ResolutionFile {
            format: FORMAT_TAG.into(),
            algebra: r.algebra.clone(),
            module: r.module.clone(),
            s_max: r.s_max,
            t_max: r.t_max,
            stages: r
                .stages
                .iter()
                .map(|s| StageFile { gens: s.gens.clone(), d: s.d.iter().map(bits).collect() })
                .collect(),
        };
        let tmp = self.dir.join(format!("{}.tmp", key));
        fs::write(&tmp, serde_json::to_string(&f).expect("json"))?;
        fs::rename(tmp, self.path(key))
    }

    /// The minimal resolution, from disk when a valid entry exists.
    pub fn resolution(
        &self,
        alg: &FiniteAlgebra,
        m: &FinModule,
        s_max: u32,
        t_max: u32,
    ) -> std::io::Result<(ResolutionWindow, Source)> {
        let key = Self::key(alg, m, s_max, t_max);
        let existed = self.path(&key).exists();
        if let Some(r) = self.load(&key, alg, m) {
            return Ok((r, Source::Hit));
        }
        let r = minimal_free_resolution(alg, m, s_max, t_max);
        self.store(&key, &r)?;
        Ok((r, if existed { Source::Replaced } else { Source::Computed }))
    }

    /// Cached entries as (file name, size in bytes), sorted by name.
    pub fn list(&self) -> std::io::Result<Vec<(String, u64)>> {
        let mut out = Vec::new();
        let rd = match fs::read_dir(&self.dir) {
            Ok(rd) => rd,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(out),
            Err(e) => return Err(e),
        };
        for e in rd {
            let e = e?;
            let name = e.file_name().to_string_lossy().into_owned();
            if name.ends_with(".json") {
                out.push((name, e.metadata()?.len()));
            }
        }
        out.sort();
        Ok(out)
    }

    /// Removes cached entries; returns how many were deleted.
    pub fn clear(&self) -> std::io::Result<usize> {
        let entries = self.list()?;
        for (name, _) in &entries {
            fs::remove_file(self.dir.join(name))?;
        }
        Ok(entries.len())
    }
}

/// Generator counts of a minimal resolution of M, which are the dimensions
/// of Ext^{s,t}(M, k).
pub fn ext_dims(r: &ResolutionWindow) -> std::collections::BTreeMap<(u32, u32), usize> {
    let mut out = std::collections::BTreeMap::new();
    for (s, st) in r.stages.iter().enumerate() {
        for &g in &st.gens {
            *out.entry((s as u32, g)).or_insert(0) += 1;
        }
    }
    out
}
