//! On-disk cache of reduced Groebner bases.
//!
//! Keys are `(ring hash, sorted generator strings, order name)`. Each entry
//! is a text file: a header line with the ring hash and order name, then one
//! polynomial string per line. Writers stage to a temporary file and rename,
//! so concurrent readers never observe a partial entry (single-writer,
//! many-reader contract).

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::Poly;
use crate::ring::Ring;
use sha2::{Digest, Sha256};
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

#[derive(Debug)]
pub struct GbCache {
    dir: PathBuf,
}

impl GbCache {
    pub fn new(dir: impl AsRef<Path>) -> Result<GbCache> {
        fs::create_dir_all(dir.as_ref())?;
        Ok(GbCache { dir: dir.as_ref().to_path_buf() })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn key(ring: &Ring, ideal: &Ideal) -> String {
        let mut hasher = Sha256::new();
        hasher.update(format!("{:016x}", ring.fingerprint()));
        hasher.update(b"|");
        hasher.update(ring.order().name().as_bytes());
        for s in ideal.sorted_gen_strings() {
            hasher.update(b"|");
            hasher.update(s.as_bytes());
        }
        let digest = hasher.finalize();
        hex(&digest[..16])
    }

    fn path_for(&self, ring: &Ring, ideal: &Ideal) -> PathBuf {
        self.dir.join(format!("{}.gb", Self::key(ring, ideal)))
    }

    pub fn lookup(&self, ring: &Ring, ideal: &Ideal) -> Result<Option<Vec<Poly>>> {
        let path = self.path_for(ring, ideal);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Io(format!("empty cache file {}", path.display())))?;
        let expected = format!("ring {:016x} order {}", ring.fingerprint(), ring.order().name());
        if header != expected {
            // key collision or stale format: treat as a miss
            return Ok(None);
        }
        let mut basis = Vec::new();
        for line in lines {
            if line.trim().is_empty() {
                continue;
            }
            basis.push(ring.parse(line)?);
        }
        Ok(Some(basis))
    }

    pub fn store(&self, ring: &Ring, ideal: &Ideal, basis: &[Poly]) -> Result<()> {
        let path = self.path_for(ring, ideal);
        let tmp = path.with_extension("gb.tmp");
        {
            let mut f = fs::File::create(&tmp)?;
            writeln!(f, "ring {:016x} order {}", ring.fingerprint(), ring.order().name())?;
            for p in basis {
                writeln!(f, "{p}")?;
            }
            f.sync_all()?;
        }
        fs::rename(&tmp, &path)?;
        Ok(())
    }
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{groebner_basis, GbOptions};
    use crate::monomial::TermOrder;
    use std::sync::Arc;

    #[test]
    fn cache_roundtrip_and_reuse() {
        let dir = std::env::temp_dir().join(format!("gbcache-test-{}", std::process::id()));
        let cache = Arc::new(GbCache::new(&dir).unwrap());
        let r = Ring::new(101, &[("x", 2), ("y", 2)], TermOrder::grevlex()).unwrap();
        let i = Ideal::parse(&r, &["x^2 - y^2", "x*y"]).unwrap();
        let opts = GbOptions { degree_ceiling: None, cache: Some(cache.clone()) };
        let g1 = groebner_basis(&i, &opts).unwrap();
        assert!(cache.lookup(&r, &i).unwrap().is_some());
        let g2 = groebner_basis(&i, &opts).unwrap();
        assert_eq!(g1.basis_strings(), g2.basis_strings());
        // permuted generators hit the same key
        let j = Ideal::parse(&r, &["x*y", "x^2 - y^2"]).unwrap();
        assert!(cache.lookup(&r, &j).unwrap().is_some());
        std::fs::remove_dir_all(&dir).ok();
    }
}
