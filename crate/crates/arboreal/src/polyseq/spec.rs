use std::fmt;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Pow};
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::intpoly::IntPoly;
use crate::error::{Error, Result};
use crate::ffpoly::is_prime;
use crate::par;
use crate::wreath::SphericalIndex;

/// A rule producing the monic integer polynomials `f_1, f_2, ..`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "params", rename_all = "snake_case")]
pub enum IntPolySeqSpec {
    /// A finite list `f_1, .., f_m`.
    ExplicitList(Vec<IntPoly>),
    /// `f_k = f` for every `k`.
    Constant(IntPoly),
    /// `f_k = (x - p^(2k+1))^2 + p^(2k-1)` for a prime `p`.
    FmFamily { p: u64 },
    /// Each `f_k` monic of degree `d_k` with the other coefficients uniform in
    /// `{-bound, .., bound}`. Levels past the index reuse its last degree.
    RandomBox { index: SphericalIndex, bound: u64, seed: u64 },
}

impl IntPolySeqSpec {
    pub fn explicit(polys: Vec<IntPoly>) -> Result<Self> {
        for (i, f) in polys.iter().enumerate() {
            check_member(f, i + 1)?;
        }
        if polys.is_empty() {
            return Err(Error::SpecParse("empty polynomial list".into()));
        }
        Ok(IntPolySeqSpec::ExplicitList(polys))
    }

    pub fn constant(f: IntPoly) -> Result<Self> {
        check_member(&f, 1)?;
        Ok(IntPolySeqSpec::Constant(f))
    }

    pub fn fm_family(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotAPrime(p));
        }
        Ok(IntPolySeqSpec::FmFamily { p })
    }

    pub fn random_box(index: SphericalIndex, bound: u64, seed: u64) -> Result<Self> {
        if index.depth() == 0 {
            return Err(Error::InvalidIndex("random sequences need a nonempty index".into()));
        }
        Ok(IntPolySeqSpec::RandomBox { index, bound, seed })
    }

    /// Reads one polynomial per line, coefficients comma separated with the
    /// constant term first. Blank lines and lines starting with `#` are skipped.
    pub fn from_list_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_list_text(&text)
    }

    pub fn from_list_text(text: &str) -> Result<Self> {
        let polys = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| l.parse::<IntPoly>())
            .collect::<Result<Vec<_>>>()?;
        Self::explicit(polys)
    }

    /// Number of members, `None` for infinite sequences.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> Option<usize> {
        match self {
            IntPolySeqSpec::ExplicitList(v) => Some(v.len()),
            _ => None,
        }
    }

    /// `d_k`.
    pub fn degree(&self, k: usize) -> Result<usize> {
        assert!(k >= 1, "sequence members are numbered from 1");
        match self {
            IntPolySeqSpec::ExplicitList(v) => v
                .get(k - 1)
                .map(|f| f.degree().unwrap())
                .ok_or(Error::SequenceExhausted { len: v.len(), k }),
            IntPolySeqSpec::Constant(f) => Ok(f.degree().unwrap()),
            IntPolySeqSpec::FmFamily { .. } => Ok(2),
            IntPolySeqSpec::RandomBox { index, .. } => Ok(index.degrees()[(k - 1).min(index.depth() - 1)]),
        }
    }

    /// The spherical index `(d_1, .., d_n)`.
    pub fn spherical_index(&self, n: usize) -> Result<SphericalIndex> {
        let degrees = (1..=n).map(|k| self.degree(k)).collect::<Result<Vec<_>>>()?;
        SphericalIndex::new(degrees)
    }

    /// `f_k` for `k >= 1`.
    pub fn nth_poly(&self, k: usize) -> Result<IntPoly> {
        assert!(k >= 1, "sequence members are numbered from 1");
        match self {
            IntPolySeqSpec::ExplicitList(v) => {
                v.get(k - 1).cloned().ok_or(Error::SequenceExhausted { len: v.len(), k })
            }
            IntPolySeqSpec::Constant(f) => Ok(f.clone()),
            IntPolySeqSpec::FmFamily { p } => {
                let base = BigInt::from(*p);
                let shift: BigInt = Pow::pow(&base, (2 * k + 1) as u32);
                let lift: BigInt = Pow::pow(&base, (2 * k - 1) as u32);
                // (x - s)^2 + l = x^2 - 2s x + s^2 + l
                Ok(IntPoly::new(vec![&shift * &shift + lift, -(BigInt::from(2) * &shift), BigInt::one()]))
            }
            IntPolySeqSpec::RandomBox { bound, seed, .. } => {
                let d = self.degree(k)?;
                let mut rng = par::stream_rng(*seed, k as u64);
                let b = *bound as i64;
                let mut coeffs: Vec<BigInt> = (0..d).map(|_| BigInt::from(rng.gen_range(-b..=b))).collect();
                coeffs.push(BigInt::one());
                Ok(IntPoly::new(coeffs))
            }
        }
    }

    /// `f_1, .., f_n`.
    pub fn first(&self, n: usize) -> Result<Vec<IntPoly>> {
        (1..=n).map(|k| self.nth_poly(k)).collect()
    }
}

fn check_member(f: &IntPoly, k: usize) -> Result<()> {
    if !f.is_monic() || f.degree().unwrap_or(0) < 1 {
        return Err(Error::NotMonic(k));
    }
    Ok(())
}

impl fmt::Display for IntPolySeqSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntPolySeqSpec::ExplicitList(v) => {
                let parts: Vec<String> = v.iter().map(|p| p.to_string()).collect();
                write!(f, "list:{}", parts.join(";"))
            }
            IntPolySeqSpec::Constant(p) => write!(f, "const:{p}"),
            IntPolySeqSpec::FmFamily { p } => write!(f, "fmf:{p}"),
            IntPolySeqSpec::RandomBox { index, bound, seed } => {
                let d: Vec<String> = index.degrees().iter().map(|d| d.to_string()).collect();
                write!(f, "random:{}:{bound}:{seed}", d.join(","))
            }
        }
    }
}

/// The inline spec language:
///
/// * `const:<poly>`, e.g. `const:x^2-2` or `const:-2,0,1`
/// * `fmf:<p>` for `(x - p^(2k+1))^2 + p^(2k-1)`
/// * `file:<path>` for a list file, one polynomial per line
/// * `list:<poly>;<poly>;..`
/// * `random:<index>:<N>:<seed>`, e.g. `random:2,2:10:7`
impl FromStr for IntPolySeqSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, rest) = s.split_once(':').ok_or_else(|| Error::SpecParse(s.to_string()))?;
        match kind.trim() {
            "const" => Self::constant(rest.parse()?),
            "fmf" => {
                let p = rest.trim().parse::<u64>().map_err(|_| Error::SpecParse(s.to_string()))?;
                Self::fm_family(p)
            }
            "file" => Self::from_list_file(Path::new(rest.trim())),
            "list" => Self::explicit(rest.split(';').map(str::parse).collect::<Result<Vec<_>>>()?),
            "random" => {
                let fields: Vec<&str> = rest.split(':').collect();
                if fields.len() != 3 {
                    return Err(Error::SpecParse(s.to_string()));
                }
                let index: SphericalIndex = fields[0].parse()?;
                let bound = fields[1].trim().parse().map_err(|_| Error::SpecParse(s.to_string()))?;
                let seed = fields[2].trim().parse().map_err(|_| Error::SpecParse(s.to_string()))?;
                Self::random_box(index, bound, seed)
            }
            _ => Err(Error::SpecParse(s.to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_sequence() {
        let s: IntPolySeqSpec = "const:x^2-2".parse().unwrap();
        for k in [1, 2, 17] {
            assert_eq!(s.nth_poly(k).unwrap(), IntPoly::from_i64s(&[-2, 0, 1]));
        }
        assert_eq!(s.spherical_index(3).unwrap().degrees(), &[2, 2, 2]);
    }

    #[test]
    fn fm_family_first_member() {
        let s = IntPolySeqSpec::fm_family(3).unwrap();
        assert_eq!(s.nth_poly(1).unwrap(), IntPoly::from_i64s(&[732, -54, 1]));
        // k = 2: (x - 243)^2 + 27
        assert_eq!(s.nth_poly(2).unwrap(), IntPoly::from_i64s(&[243 * 243 + 27, -486, 1]));
        assert!(IntPolySeqSpec::fm_family(9).is_err());
    }

    #[test]
    fn random_box_is_deterministic_and_bounded() {
        let idx = SphericalIndex::new(vec![2, 3]).unwrap();
        let a = IntPolySeqSpec::random_box(idx.clone(), 5, 42).unwrap();
        let b = IntPolySeqSpec::random_box(idx, 5, 42).unwrap();
        for k in 1..=4 {
            let f = a.nth_poly(k).unwrap();
            assert_eq!(f, b.nth_poly(k).unwrap());
            assert!(f.is_monic());
            assert_eq!(f.degree().unwrap(), if k == 1 { 2 } else { 3 });
            for c in f.to_i64s().unwrap() {
                assert!(c.abs() <= 5);
            }
        }
    }

    #[test]
    fn explicit_lists() {
        let s = IntPolySeqSpec::from_list_text("# comment\n-2,0,1\n\n1,1,0,1\n").unwrap();
        assert_eq!(s.len(), Some(2));
        assert_eq!(s.degree(2).unwrap(), 3);
        assert!(matches!(s.nth_poly(3), Err(Error::SequenceExhausted { .. })));
        assert!(IntPolySeqSpec::from_list_text("-2,0,2\n").is_err());
        assert!(IntPolySeqSpec::from_list_text("5\n").is_err());
    }

    #[test]
    fn parse_and_display() {
        for s in ["const:x^2 - 2", "fmf:3", "random:2,2:10:7", "list:x^2 + 1;x^3 - x"] {
            let spec: IntPolySeqSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!("bogus:1".parse::<IntPolySeqSpec>().is_err());
        assert!("random:2,0:10:7".parse::<IntPolySeqSpec>().is_err());
        assert!("const:2x^2-1".parse::<IntPolySeqSpec>().is_err());
    }

    #[test]
    fn list_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("seq.txt");
        std::fs::write(&path, "-2,0,1\n1,0,1\n").unwrap();
        let spec: IntPolySeqSpec = format!("file:{}", path.display()).parse().unwrap();
        assert_eq!(spec.nth_poly(2).unwrap(), IntPoly::from_i64s(&[1, 0, 1]));
    }
}
