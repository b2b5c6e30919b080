//! On-disk polynomial cache: one JSON file per univariate family, an
//! array of coefficient-string arrays indexed from 1. Loading validates
//! every family invariant and re-derives each member before trusting
//! anything; a file that fails validation is reported and ignored.

use std::path::Path;

use betti_core::arith::IntPoly;
use betti_core::recurrences::{Cache, UniFamily};

const CACHED_FAMILIES: [UniFamily; 5] = [
    UniFamily::P,
    UniFamily::S,
    UniFamily::Ptilde,
    UniFamily::G,
    UniFamily::K,
];

fn file_for(dir: &Path, family: UniFamily) -> std::path::PathBuf {
    dir.join(format!("{}.json", family.tag()))
}

/// Loads and validates whatever family files exist under the directory.
pub fn load_dir(cache: &Cache, dir: &Path) {
    for family in CACHED_FAMILIES {
        let path = file_for(dir, family);
        if !path.exists() {
            continue;
        }
        let outcome = std::fs::read_to_string(&path)
            .map_err(|e| e.to_string())
            .and_then(|text| {
                serde_json::from_str::<Vec<IntPoly>>(&text).map_err(|e| e.to_string())
            })
            .and_then(|values| {
                cache
                    .verify_cached_uni(family, &values)
                    .map_err(|e| e.to_string())
            });
        if let Err(e) = outcome {
            eprintln!(
                "warning: ignoring cache file {}: {e}",
                path.display()
            );
        }
    }
}

/// Writes the family prefix up to `max` as a JSON file in the directory.
pub fn save_family(
    cache: &Cache,
    dir: &Path,
    family: UniFamily,
    max: u32,
) -> anyhow::Result<()> {
    std::fs::create_dir_all(dir)?;
    let values = cache.uni_prefix(family, max)?;
    let text = serde_json::to_string(&values)?;
    std::fs::write(file_for(dir, family), text)?;
    Ok(())
}
