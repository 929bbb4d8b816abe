//! Canonical encoding, 64-bit signatures, and the membership store holding
//! the current set of maximal bicliques.

use std::collections::HashSet;
use std::fmt;
use std::io::{BufRead, Write};

use crate::biclique::Biclique;
use crate::error::StoreError;

/// Byte placed between the left and right id runs.
pub const SIDE_SEPARATOR: u8 = b'|';

/// Seed passed to the murmur hash; changing it changes every signature.
pub const SIGNATURE_SEED: u32 = 0x5eed_b1c1;

/// Encodes `b` as `[|X| : u32 BE] [X ids : u32 BE ...] '|' [Y ids : u32 BE ...]`.
///
/// The length prefix pins the separator position, so the encoding is
/// injective even though the separator byte may also occur inside an id.
pub fn canonical_form(b: &Biclique) -> Vec<u8> {
    let mut out = Vec::with_capacity(5 + 4 * b.order());
    out.extend_from_slice(&(b.left().len() as u32).to_be_bytes());
    for &u in b.left() {
        out.extend_from_slice(&u.to_be_bytes());
    }
    out.push(SIDE_SEPARATOR);
    for &v in b.right() {
        out.extend_from_slice(&v.to_be_bytes());
    }
    out
}

/// Inverse of [`canonical_form`]; `None` for byte strings it never produces.
pub fn decode_canonical(bytes: &[u8]) -> Option<Biclique> {
    let (len, rest) = bytes.split_first_chunk::<4>()?;
    let nl = u32::from_be_bytes(*len) as usize;
    let left_bytes = rest.get(..nl.checked_mul(4)?)?;
    let (&sep, right_bytes) = rest.get(nl * 4..)?.split_first()?;
    if sep != SIDE_SEPARATOR || right_bytes.len() % 4 != 0 {
        return None;
    }
    let ids = |raw: &[u8]| -> Vec<u32> {
        raw.chunks_exact(4)
            .map(|c| u32::from_be_bytes(c.try_into().unwrap()))
            .collect()
    };
    let (left, right) = (ids(left_bytes), ids(right_bytes));
    let ascending = |v: &[u32]| v.windows(2).all(|w| w[0] < w[1]);
    if !ascending(&left) || !ascending(&right) {
        return None;
    }
    Some(Biclique::from_sorted(left, right))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature(pub u64);

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:016x}", self.0)
    }
}

/// Lower 64 bits of MurmurHash3 x64/128 over the canonical form.
pub fn signature(b: &Biclique) -> Signature {
    signature_of_bytes(&canonical_form(b))
}

fn signature_of_bytes(bytes: &[u8]) -> Signature {
    let mut reader = bytes;
    let h = murmur3::murmur3_x64_128(&mut reader, SIGNATURE_SEED)
        .expect("reading from a byte slice cannot fail");
    Signature(h as u64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum StoreMode {
    /// Keep one 64-bit signature per biclique.
    #[default]
    Hash64,
    /// Keep the full canonical form.
    Exact,
}

impl std::str::FromStr for StoreMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "hash64" => Ok(StoreMode::Hash64),
            "exact" => Ok(StoreMode::Exact),
            other => Err(format!("unknown signature mode `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Members {
    Hash64(HashSet<u64>),
    Exact(HashSet<Vec<u8>>),
}

/// Membership structure over a set of bicliques.
///
/// In `Hash64` mode a lookup can report a false positive when two canonical
/// forms collide, never a false negative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignatureStore {
    members: Members,
}

impl SignatureStore {
    pub fn new(mode: StoreMode) -> Self {
        let members = match mode {
            StoreMode::Hash64 => Members::Hash64(HashSet::new()),
            StoreMode::Exact => Members::Exact(HashSet::new()),
        };
        SignatureStore { members }
    }

    pub fn mode(&self) -> StoreMode {
        match self.members {
            Members::Hash64(_) => StoreMode::Hash64,
            Members::Exact(_) => StoreMode::Exact,
        }
    }

    pub fn len(&self) -> usize {
        match &self.members {
            Members::Hash64(set) => set.len(),
            Members::Exact(set) => set.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, b: &Biclique) -> bool {
        match &self.members {
            Members::Hash64(set) => set.contains(&signature(b).0),
            Members::Exact(set) => set.contains(&canonical_form(b)),
        }
    }

    pub fn insert(&mut self, b: &Biclique) -> Result<(), StoreError> {
        if self.try_insert(b) {
            Ok(())
        } else {
            Err(StoreError::AlreadyPresent(b.clone()))
        }
    }

    pub fn remove(&mut self, b: &Biclique) -> Result<(), StoreError> {
        let removed = match &mut self.members {
            Members::Hash64(set) => set.remove(&signature(b).0),
            Members::Exact(set) => set.remove(&canonical_form(b)),
        };
        if removed {
            Ok(())
        } else {
            Err(StoreError::Missing(b.clone()))
        }
    }

    /// Inserts `b`, returning false if an equal key was already present.
    pub(crate) fn try_insert(&mut self, b: &Biclique) -> bool {
        match &mut self.members {
            Members::Hash64(set) => set.insert(signature(b).0),
            Members::Exact(set) => set.insert(canonical_form(b)),
        }
    }

    /// Removes every `deleted` member and inserts every `added` one.
    ///
    /// All preconditions are checked before anything changes.
    pub fn apply_changeset(&mut self, added: &[Biclique], deleted: &[Biclique]) -> Result<(), StoreError> {
        let mut gone = SignatureStore::new(self.mode());
        for b in deleted {
            if !self.contains(b) || !gone.try_insert(b) {
                return Err(StoreError::Missing(b.clone()));
            }
        }
        let mut fresh = SignatureStore::new(self.mode());
        for b in added {
            if (self.contains(b) && !gone.contains(b)) || !fresh.try_insert(b) {
                return Err(StoreError::AlreadyPresent(b.clone()));
            }
        }
        for b in deleted {
            self.remove(b)?;
        }
        for b in added {
            self.insert(b)?;
        }
        Ok(())
    }

    /// Writes one hex-encoded canonical form per line, sorted. Exact mode only.
    pub fn dump<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        let Members::Exact(set) = &self.members else {
            return Err(std::io::Error::new(
                std::io::ErrorKind::Unsupported,
                "only exact stores can be dumped",
            ));
        };
        let mut lines: Vec<String> = set.iter().map(hex::encode).collect();
        lines.sort_unstable();
        for line in lines {
            writeln!(out, "{line}")?;
        }
        Ok(())
    }

    /// Reads a dump produced by [`SignatureStore::dump`] into an exact store.
    pub fn load<R: BufRead>(input: R) -> Result<Self, StoreError> {
        let mut store = SignatureStore::new(StoreMode::Exact);
        for (idx, line) in input.lines().enumerate() {
            let line_no = idx + 1;
            let line = line.map_err(|e| StoreError::Load {
                line: line_no,
                reason: e.to_string(),
            })?;
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let bytes = hex::decode(line).map_err(|e| StoreError::Load {
                line: line_no,
                reason: e.to_string(),
            })?;
            let b = decode_canonical(&bytes).ok_or_else(|| StoreError::Load {
                line: line_no,
                reason: "not a canonical biclique encoding".into(),
            })?;
            store.insert(&b).map_err(|e| StoreError::Load {
                line: line_no,
                reason: e.to_string(),
            })?;
        }
        Ok(store)
    }
}

impl Default for SignatureStore {
    fn default() -> Self {
        SignatureStore::new(StoreMode::default())
    }
}
