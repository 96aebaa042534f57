//! Persistent memoisation for the expensive central-element and
//! structure-constant computations.
//!
//! Values are cached in memory always, and mirrored to an on-disk store
//! when a directory is configured. Each record is a single JSON file with
//! a format-version field; writes go through a temporary file and an
//! atomic rename, so concurrent readers never observe partial records.

use std::collections::BTreeMap;
use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::{Arc, RwLock};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::combinat::Partition;
use crate::exactalg::IvlPoly;
use crate::hecke::HeckeElem;
use crate::symfunc::SymFuncElem;

/// On-disk record format version; bump when the JSON layout changes.
pub const CACHE_FORMAT_VERSION: u32 = 1;

/// Default bound on the Hecke rank for basis construction.
pub const DEFAULT_MAX_HECKE_RANK: usize = 7;

/// Default bound on `|mu| + |nu|` for structure constants.
pub const DEFAULT_MAX_FILTRATION: u32 = 4;

/// Shared compute context: size guards plus the memoisation store.
pub struct Cache {
    dir: Option<PathBuf>,
    max_hecke_rank: usize,
    max_filtration: u32,
    gamma: RwLock<HashMap<(usize, Partition), Arc<HeckeElem>>>,
    jm_sym: RwLock<HashMap<(usize, u32, bool), Arc<HeckeElem>>>,
    phi: RwLock<HashMap<(Partition, Partition), Arc<BTreeMap<Partition, IvlPoly>>>>,
    fmu: RwLock<HashMap<Partition, Arc<SymFuncElem>>>,
}

#[derive(Serialize, Deserialize)]
struct GammaRecord {
    format_version: u32,
    n: usize,
    mu: Partition,
    element: HeckeElem,
}

#[derive(Serialize, Deserialize)]
struct PhiRecord {
    format_version: u32,
    mu: Partition,
    nu: Partition,
    terms: Vec<PhiTerm>,
}

#[derive(Serialize, Deserialize)]
pub struct PhiTerm {
    pub lambda: Partition,
    pub phi: IvlPoly,
}

#[derive(Serialize, Deserialize)]
struct FmuRecord {
    format_version: u32,
    mu: Partition,
    f: SymFuncElem,
}

impl Default for Cache {
    fn default() -> Self {
        Self::in_memory()
    }
}

impl Cache {
    /// Memory-only cache with default guards.
    pub fn in_memory() -> Self {
        Cache {
            dir: None,
            max_hecke_rank: DEFAULT_MAX_HECKE_RANK,
            max_filtration: DEFAULT_MAX_FILTRATION,
            gamma: RwLock::new(HashMap::new()),
            jm_sym: RwLock::new(HashMap::new()),
            phi: RwLock::new(HashMap::new()),
            fmu: RwLock::new(HashMap::new()),
        }
    }

    /// Cache backed by a directory (created if missing).
    pub fn with_dir(dir: impl Into<PathBuf>) -> std::io::Result<Self> {
        let dir = dir.into();
        std::fs::create_dir_all(&dir)?;
        let mut c = Self::in_memory();
        c.dir = Some(dir);
        Ok(c)
    }

    pub fn set_max_hecke_rank(&mut self, n: usize) {
        self.max_hecke_rank = n;
    }

    pub fn max_hecke_rank(&self) -> usize {
        self.max_hecke_rank
    }

    pub fn set_max_filtration(&mut self, k: u32) {
        self.max_filtration = k;
    }

    pub fn max_filtration(&self) -> u32 {
        self.max_filtration
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    /// Remove every record from disk (memory entries survive the current
    /// process only).
    pub fn clear_disk(&self) -> std::io::Result<usize> {
        let Some(dir) = &self.dir else { return Ok(0) };
        let mut removed = 0;
        for entry in std::fs::read_dir(dir)? {
            let path = entry?.path();
            if path.extension().is_some_and(|e| e == "json") {
                std::fs::remove_file(&path)?;
                removed += 1;
            }
        }
        Ok(removed)
    }

    /// Number of JSON records on disk.
    pub fn disk_records(&self) -> std::io::Result<usize> {
        let Some(dir) = &self.dir else { return Ok(0) };
        let mut count = 0;
        for entry in std::fs::read_dir(dir)? {
            let path = entry?.path();
            if path.extension().is_some_and(|e| e == "json") {
                count += 1;
            }
        }
        Ok(count)
    }

    fn partition_tag(p: &Partition) -> String {
        if p.is_empty() {
            "0".to_string()
        } else {
            p.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>().join("-")
        }
    }

    fn read_record<T: DeserializeOwned>(&self, name: &str) -> Option<T> {
        let dir = self.dir.as_ref()?;
        let path = dir.join(name);
        let data = std::fs::read_to_string(path).ok()?;
        serde_json::from_str(&data).ok()
    }

    fn write_record<T: Serialize>(&self, name: &str, value: &T) {
        let Some(dir) = &self.dir else { return };
        let path = dir.join(name);
        let tmp = dir.join(format!(".{name}.tmp"));
        let Ok(data) = serde_json::to_string(value) else { return };
        if std::fs::write(&tmp, data).is_ok() {
            let _ = std::fs::rename(&tmp, &path);
        }
    }

    // --- Geck-Rouquier elements, keyed by (n, mu) ---

    pub fn get_gamma(&self, n: usize, mu: &Partition) -> Option<Arc<HeckeElem>> {
        if let Some(v) = self.gamma.read().unwrap().get(&(n, mu.clone())) {
            return Some(Arc::clone(v));
        }
        let name = format!("gamma_n{}_mu{}.json", n, Self::partition_tag(mu));
        let rec: GammaRecord = self.read_record(&name)?;
        if rec.format_version != CACHE_FORMAT_VERSION || rec.n != n || &rec.mu != mu {
            return None;
        }
        let v = Arc::new(rec.element);
        self.gamma.write().unwrap().insert((n, mu.clone()), Arc::clone(&v));
        Some(v)
    }

    pub fn put_gamma(&self, n: usize, mu: &Partition, elem: Arc<HeckeElem>) {
        let name = format!("gamma_n{}_mu{}.json", n, Self::partition_tag(mu));
        self.write_record(
            &name,
            &GammaRecord {
                format_version: CACHE_FORMAT_VERSION,
                n,
                mu: mu.clone(),
                element: (*elem).clone(),
            },
        );
        self.gamma.write().unwrap().insert((n, mu.clone()), elem);
    }

    // --- elementary symmetric evaluations at JM elements (memory only) ---

    pub fn get_jm_elementary(&self, n: usize, r: u32, scaled: bool) -> Option<Arc<HeckeElem>> {
        self.jm_sym.read().unwrap().get(&(n, r, scaled)).cloned()
    }

    pub fn put_jm_elementary(&self, n: usize, r: u32, scaled: bool, elem: Arc<HeckeElem>) {
        self.jm_sym.write().unwrap().insert((n, r, scaled), elem);
    }

    // --- structure constants, keyed symmetrically by (mu, nu) ---

    fn phi_key(mu: &Partition, nu: &Partition) -> (Partition, Partition) {
        if mu <= nu {
            (mu.clone(), nu.clone())
        } else {
            (nu.clone(), mu.clone())
        }
    }

    pub fn get_phi(
        &self,
        mu: &Partition,
        nu: &Partition,
    ) -> Option<Arc<BTreeMap<Partition, IvlPoly>>> {
        let key = Self::phi_key(mu, nu);
        if let Some(v) = self.phi.read().unwrap().get(&key) {
            return Some(Arc::clone(v));
        }
        let name = format!(
            "phi_mu{}_nu{}.json",
            Self::partition_tag(&key.0),
            Self::partition_tag(&key.1)
        );
        let rec: PhiRecord = self.read_record(&name)?;
        if rec.format_version != CACHE_FORMAT_VERSION {
            return None;
        }
        let map: BTreeMap<Partition, IvlPoly> =
            rec.terms.into_iter().map(|t| (t.lambda, t.phi)).collect();
        let v = Arc::new(map);
        self.phi.write().unwrap().insert(key, Arc::clone(&v));
        Some(v)
    }

    pub fn put_phi(
        &self,
        mu: &Partition,
        nu: &Partition,
        table: Arc<BTreeMap<Partition, IvlPoly>>,
    ) {
        let key = Self::phi_key(mu, nu);
        let name = format!(
            "phi_mu{}_nu{}.json",
            Self::partition_tag(&key.0),
            Self::partition_tag(&key.1)
        );
        self.write_record(
            &name,
            &PhiRecord {
                format_version: CACHE_FORMAT_VERSION,
                mu: key.0.clone(),
                nu: key.1.clone(),
                terms: table
                    .iter()
                    .map(|(l, p)| PhiTerm { lambda: l.clone(), phi: p.clone() })
                    .collect(),
            },
        );
        self.phi.write().unwrap().insert(key, table);
    }

    // --- preimages f_mu of the K basis under the e_r substitution ---

    pub fn get_fmu(&self, mu: &Partition) -> Option<Arc<SymFuncElem>> {
        if let Some(v) = self.fmu.read().unwrap().get(mu) {
            return Some(Arc::clone(v));
        }
        let name = format!("fmu_{}.json", Self::partition_tag(mu));
        let rec: FmuRecord = self.read_record(&name)?;
        if rec.format_version != CACHE_FORMAT_VERSION || &rec.mu != mu {
            return None;
        }
        let v = Arc::new(rec.f);
        self.fmu.write().unwrap().insert(mu.clone(), Arc::clone(&v));
        Some(v)
    }

    pub fn put_fmu(&self, mu: &Partition, f: Arc<SymFuncElem>) {
        let name = format!("fmu_{}.json", Self::partition_tag(mu));
        self.write_record(
            &name,
            &FmuRecord {
                format_version: CACHE_FORMAT_VERSION,
                mu: mu.clone(),
                f: (*f).clone(),
            },
        );
        self.fmu.write().unwrap().insert(mu.clone(), f);
    }
}
