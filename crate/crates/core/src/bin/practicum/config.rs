use std::path::{Path, PathBuf};

use serde::Deserialize;

use practicum::arith::FactorBudget;
use practicum::practical::{
    sieve_practicals, PracticalBitmap, SieveConfig, DEFAULT_ORACLE_BOUND,
};
use practicum::{Error, Result};

use crate::args::{Format, GlobalArgs};

/// Keys mirror the global flag names.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
struct FileConfig {
    format: Option<Format>,
    cache_dir: Option<PathBuf>,
    sieve_limit: Option<u64>,
    factor_bits: Option<u64>,
    oracle_bound: Option<u64>,
    scan_limit: Option<u64>,
    verify: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub format: Format,
    pub cache_dir: PathBuf,
    pub sieve_limit: u64,
    pub budget: FactorBudget,
    pub oracle_bound: u64,
    pub scan_limit: u64,
    pub verify: bool,
}

fn positive(name: &str, v: u64) -> Result<u64> {
    if v == 0 {
        return Err(Error::InvalidInput(format!("--{name} must be positive")));
    }
    Ok(v)
}

impl RunConfig {
    pub fn resolve(g: &GlobalArgs) -> Result<Self> {
        let file = match &g.config {
            Some(path) => {
                let text = std::fs::read_to_string(path)?;
                toml::from_str::<FileConfig>(&text).map_err(|e| {
                    Error::InvalidInput(format!("config {}: {e}", path.display()))
                })?
            }
            None => FileConfig::default(),
        };
        let budget = FactorBudget {
            max_bits: positive(
                "factor-bits",
                g.factor_bits.or(file.factor_bits).unwrap_or(FactorBudget::default().max_bits),
            )?,
            ..FactorBudget::default()
        };
        Ok(RunConfig {
            format: g.format.or(file.format).unwrap_or(Format::Json),
            cache_dir: g
                .cache_dir
                .clone()
                .or(file.cache_dir)
                .unwrap_or_else(|| std::env::temp_dir().join("practicum-cache")),
            sieve_limit: positive(
                "sieve-limit",
                g.sieve_limit.or(file.sieve_limit).unwrap_or(1_000_000_000),
            )?,
            budget,
            oracle_bound: positive(
                "oracle-bound",
                g.oracle_bound.or(file.oracle_bound).unwrap_or(DEFAULT_ORACLE_BOUND),
            )?,
            scan_limit: positive(
                "scan-limit",
                g.scan_limit.or(file.scan_limit).unwrap_or(1_000_000),
            )?,
            verify: g.verify || file.verify.unwrap_or(false),
        })
    }

    fn cache_path(&self, limit: u64) -> PathBuf {
        self.cache_dir.join(format!("practicals-{limit}.bin"))
    }

    /// Any cached bitmap covering `limit`, smallest first.
    fn find_cached(&self, limit: u64) -> Option<PracticalBitmap> {
        let entries = std::fs::read_dir(&self.cache_dir).ok()?;
        let mut limits: Vec<u64> = entries
            .filter_map(|e| {
                let name = e.ok()?.file_name().into_string().ok()?;
                name.strip_prefix("practicals-")?
                    .strip_suffix(".bin")?
                    .parse()
                    .ok()
            })
            .filter(|&l| l >= limit)
            .collect();
        limits.sort_unstable();
        // a file that fails validation is ignored and will be overwritten
        limits
            .into_iter()
            .find_map(|l| PracticalBitmap::load(&self.cache_path(l)).ok())
    }

    /// Bitmap up to at least `limit`, from the cache when possible. Returns
    /// whether it came from the cache.
    pub fn bitmap(&self, limit: u64) -> Result<(PracticalBitmap, bool)> {
        if limit > self.sieve_limit {
            return Err(Error::InvalidInput(format!(
                "limit {limit} exceeds --sieve-limit {}",
                self.sieve_limit
            )));
        }
        if let Some(b) = self.find_cached(limit) {
            return Ok((b, true));
        }
        let bitmap = sieve_practicals(limit, &SieveConfig::default())?;
        // caching is best effort; an unwritable directory only costs time
        if std::fs::create_dir_all(&self.cache_dir).is_ok() {
            let _ = save_atomically(&bitmap, &self.cache_path(limit));
        }
        Ok((bitmap, false))
    }
}

pub fn save_atomically(bitmap: &PracticalBitmap, path: &Path) -> Result<()> {
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    bitmap.save(&tmp)?;
    std::fs::rename(&tmp, path)?;
    Ok(())
}
