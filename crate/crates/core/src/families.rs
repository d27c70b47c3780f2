//! Spectrum generators for symmetric, alternating and rank-one linear groups,
//! a brute-force oracle for `PSL₂(q)` over small fields, and loading of
//! externally tabulated spectra.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use thiserror::Error;

use crate::field::{FieldError, SmallField};
use crate::numtheory::{factorize, is_prime};
use crate::spectrum::{Spectrum, SpectrumError};

pub const MAX_DEGREE: u64 = 200;
pub const MAX_FIELD_ORDER: u64 = 1_000_000;
pub const MAX_ORACLE_FIELD_ORDER: u64 = 13;

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("degree {0} is outside 2..=200")]
    DegreeOutOfRange(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field order {0} is outside 3..=1000000")]
    FieldOutOfRange(u64),
    #[error("field order {0} is outside the enumeration range 4..=13")]
    OracleOutOfRange(u64),
    #[error("unknown group family `{0}`")]
    UnknownKind(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("malformed spectrum file {path}: {source}")]
    Parse {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// A field order `q = p^m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimePower {
    pub q: u64,
    pub p: u64,
    pub m: u32,
}

impl PrimePower {
    pub fn new(q: u64) -> Result<Self, FamilyError> {
        if q < 2 {
            return Err(FamilyError::NotPrimePower(q));
        }
        let f = factorize(q).map_err(|_| FamilyError::NotPrimePower(q))?;
        match f.pairs() {
            [(p, m)] => Ok(PrimePower { q, p: *p, m: *m }),
            _ => Err(FamilyError::NotPrimePower(q)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    Alt,
    Sym,
    Psl2,
    Pgl2,
}

impl FromStr for FamilyKind {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "alt" => Ok(FamilyKind::Alt),
            "sym" => Ok(FamilyKind::Sym),
            "psl2" => Ok(FamilyKind::Psl2),
            "pgl2" => Ok(FamilyKind::Pgl2),
            _ => Err(FamilyError::UnknownKind(s.to_string())),
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyKind::Alt => "alt",
            FamilyKind::Sym => "sym",
            FamilyKind::Psl2 => "psl2",
            FamilyKind::Pgl2 => "pgl2",
        })
    }
}

/// Identifies a group whose spectrum can be produced.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupDescriptor {
    Alt(u64),
    Sym(u64),
    Psl2(PrimePower),
    Pgl2(PrimePower),
    External(PathBuf),
}

impl GroupDescriptor {
    /// Validates the parameter for a built-in family: `n` in `2..=200` for
    /// alt/sym, a prime power `q` in `3..=10^6` for psl2/pgl2.
    pub fn family(kind: FamilyKind, param: u64) -> Result<Self, FamilyError> {
        match kind {
            FamilyKind::Alt | FamilyKind::Sym => {
                if !(2..=MAX_DEGREE).contains(&param) {
                    return Err(FamilyError::DegreeOutOfRange(param));
                }
                Ok(if kind == FamilyKind::Alt {
                    GroupDescriptor::Alt(param)
                } else {
                    GroupDescriptor::Sym(param)
                })
            }
            FamilyKind::Psl2 | FamilyKind::Pgl2 => {
                let pp = PrimePower::new(param)?;
                if !(3..=MAX_FIELD_ORDER).contains(&param) {
                    return Err(FamilyError::FieldOutOfRange(param));
                }
                Ok(if kind == FamilyKind::Psl2 {
                    GroupDescriptor::Psl2(pp)
                } else {
                    GroupDescriptor::Pgl2(pp)
                })
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            GroupDescriptor::Alt(n) => format!("Alt({n})"),
            GroupDescriptor::Sym(n) => format!("Sym({n})"),
            GroupDescriptor::Psl2(pp) => format!("PSL2({})", pp.q),
            GroupDescriptor::Pgl2(pp) => format!("PGL2({})", pp.q),
            GroupDescriptor::External(path) => path.display().to_string(),
        }
    }

    pub fn spectrum(&self) -> Result<Spectrum, FamilyError> {
        match self {
            GroupDescriptor::Alt(n) => alt_spectrum(*n),
            GroupDescriptor::Sym(n) => sym_spectrum(*n),
            GroupDescriptor::Psl2(pp) => psl2_spectrum(pp.q),
            GroupDescriptor::Pgl2(pp) => pgl2_spectrum(pp.q),
            GroupDescriptor::External(path) => load_spectrum_file(path),
        }
    }
}

/// Prime powers `p^a ≤ n` with their lcm contribution. An element of `Sym_n`
/// of order `m` exists iff the prime-power parts of `m` sum to at most `n`;
/// in `Alt_n` an even `m` additionally needs a second even-length cycle,
/// the cheapest being a transposition.
struct CycleOrders {
    n: u64,
    even_only: bool,
    primes: Vec<u64>,
    exps: Vec<u32>,
    found: Vec<u64>,
}

impl CycleOrders {
    fn effective(&self, cost: u64, even: bool) -> u64 {
        if self.even_only && even {
            cost + 2
        } else {
            cost
        }
    }

    fn search(&mut self, idx: usize, cost: u64, value: u64) {
        if idx == self.primes.len() {
            if self.is_maximal(cost, value) {
                self.found.push(value);
            }
            return;
        }
        let p = self.primes[idx];
        self.exps[idx] = 0;
        self.search(idx + 1, cost, value);
        let mut pa = p;
        let mut a = 1;
        while self.effective(cost + pa, value % 2 == 0 || p == 2) <= self.n {
            self.exps[idx] = a;
            self.search(idx + 1, cost + pa, value * pa);
            pa *= p;
            a += 1;
        }
        self.exps[idx] = 0;
    }

    // No single prime can be raised one step without exceeding the budget.
    fn is_maximal(&self, cost: u64, value: u64) -> bool {
        self.primes.iter().zip(&self.exps).all(|(&p, &a)| {
            let step = if a == 0 { p } else { p.pow(a + 1) - p.pow(a) };
            let even = value % 2 == 0 || p == 2;
            self.effective(cost + step, even) > self.n
        })
    }
}

fn cycle_type_spectrum(name: String, n: u64, even_only: bool) -> Result<Spectrum, FamilyError> {
    if !(2..=MAX_DEGREE).contains(&n) {
        return Err(FamilyError::DegreeOutOfRange(n));
    }
    let primes: Vec<u64> = (2..=n).filter(|&p| is_prime(p)).collect();
    let mut search = CycleOrders {
        n,
        even_only,
        exps: vec![0; primes.len()],
        primes,
        found: Vec::new(),
    };
    search.search(0, 0, 1);
    Ok(Spectrum::from_antichain(name, search.found))
}

/// Maximal element orders of `Sym_n`: lcms of cycle types of partitions of `n`.
pub fn sym_spectrum(n: u64) -> Result<Spectrum, FamilyError> {
    cycle_type_spectrum(format!("Sym({n})"), n, false)
}

/// Maximal element orders of `Alt_n`: lcms of cycle types with an even
/// number of even-length cycles.
pub fn alt_spectrum(n: u64) -> Result<Spectrum, FamilyError> {
    cycle_type_spectrum(format!("Alt({n})"), n, true)
}

fn field_order(q: u64) -> Result<PrimePower, FamilyError> {
    let pp = PrimePower::new(q)?;
    if !(3..=MAX_FIELD_ORDER).contains(&q) {
        return Err(FamilyError::FieldOutOfRange(q));
    }
    Ok(pp)
}

/// `PSL₂(q)`: `{2, q − 1, q + 1}` for even `q`, `{p, (q − 1)/2, (q + 1)/2}`
/// for odd `q`.
pub fn psl2_spectrum(q: u64) -> Result<Spectrum, FamilyError> {
    let pp = field_order(q)?;
    let orders = if q % 2 == 0 {
        [2, q - 1, q + 1]
    } else {
        [pp.p, (q - 1) / 2, (q + 1) / 2]
    };
    Ok(Spectrum::normalize(format!("PSL2({q})"), &orders)?)
}

/// `PGL₂(q)`: divisors of `p`, `q − 1` and `q + 1`.
pub fn pgl2_spectrum(q: u64) -> Result<Spectrum, FamilyError> {
    let pp = field_order(q)?;
    Ok(Spectrum::normalize(format!("PGL2({q})"), &[pp.p, q - 1, q + 1])?)
}

type Mat = [u32; 4];

fn mat_mul(f: &SmallField, a: &Mat, b: &Mat) -> Mat {
    let dot = |x: u32, y: u32, z: u32, w: u32| f.add(f.mul(x, y), f.mul(z, w));
    [
        dot(a[0], b[0], a[1], b[2]),
        dot(a[0], b[1], a[1], b[3]),
        dot(a[2], b[0], a[3], b[2]),
        dot(a[2], b[1], a[3], b[3]),
    ]
}

/// Spectrum of `PSL₂(q)` by enumerating every determinant-one matrix over the
/// `q`-element field and taking orders modulo `±I`. Only for `4 ≤ q ≤ 13`.
pub fn enumerate_psl2_orders(q: u64) -> Result<Spectrum, FamilyError> {
    if !(4..=MAX_ORACLE_FIELD_ORDER).contains(&q) {
        return Err(FamilyError::OracleOutOfRange(q));
    }
    PrimePower::new(q)?;
    let f = SmallField::new(q)?;
    let q32 = f.order();
    let one = f.one();
    let minus_one = f.neg(one);
    let identity: Mat = [one, 0, 0, one];
    let minus_identity: Mat = [minus_one, 0, 0, minus_one];
    let mut orders = Vec::new();
    for a in 0..q32 {
        for b in 0..q32 {
            for c in 0..q32 {
                for d in 0..q32 {
                    if f.sub(f.mul(a, d), f.mul(b, c)) != one {
                        continue;
                    }
                    let m = [a, b, c, d];
                    let mut power = m;
                    let mut k = 1u64;
                    while power != identity && power != minus_identity {
                        power = mat_mul(&f, &power, &m);
                        k += 1;
                    }
                    orders.push(k);
                }
            }
        }
    }
    Ok(Spectrum::normalize(format!("PSL2({q})"), &orders)?)
}

/// Loads and normalizes a spectrum JSON file.
pub fn load_spectrum_file(path: impl AsRef<Path>) -> Result<Spectrum, FamilyError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| FamilyError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_spectrum(&text).map_err(|e| match e {
        FamilyError::Parse { source, .. } => FamilyError::Parse {
            path: path.to_path_buf(),
            source,
        },
        other => other,
    })
}

fn parse_spectrum(text: &str) -> Result<Spectrum, FamilyError> {
    serde_json::from_str(text).map_err(|source| FamilyError::Parse {
        path: PathBuf::new(),
        source,
    })
}

const BUNDLED: &[(&str, &str)] = &[
    ("M11.json", include_str!("../data/spectra/M11.json")),
    ("M12.json", include_str!("../data/spectra/M12.json")),
    ("M22.json", include_str!("../data/spectra/M22.json")),
    ("M23.json", include_str!("../data/spectra/M23.json")),
    ("M24.json", include_str!("../data/spectra/M24.json")),
    ("J1.json", include_str!("../data/spectra/J1.json")),
    ("J2.json", include_str!("../data/spectra/J2.json")),
    ("J3.json", include_str!("../data/spectra/J3.json")),
    ("HS.json", include_str!("../data/spectra/HS.json")),
];

/// Externally tabulated spectra shipped with the crate (sporadic groups).
/// These are input data, not computed values.
pub fn bundled_spectra() -> Vec<Spectrum> {
    BUNDLED
        .iter()
        .map(|(file, text)| parse_spectrum(text).unwrap_or_else(|e| panic!("bundled {file}: {e}")))
        .collect()
}

/// Directory holding the bundled spectrum files in the source tree.
pub fn bundled_data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join("spectra")
}
