//! JSON wire representations.
//!
//! Complex numbers are always serialized as `{"re": r, "im": i}` pairs of
//! IEEE-754 doubles, never as tuples, so reports and input files stay
//! language-neutral and diff-friendly.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Wire form of one complex number.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReIm {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ReIm {
    fn from(z: Complex64) -> Self {
        ReIm { re: z.re, im: z.im }
    }
}

impl From<ReIm> for Complex64 {
    fn from(w: ReIm) -> Self {
        Complex64::new(w.re, w.im)
    }
}

pub fn to_wire_vec(zs: &[Complex64]) -> Vec<ReIm> {
    zs.iter().map(|&z| z.into()).collect()
}

pub fn from_wire_vec(ws: &[ReIm]) -> Vec<Complex64> {
    ws.iter().map(|&w| w.into()).collect()
}

pub fn to_wire_matrix(rows: &[Vec<Complex64>]) -> Vec<Vec<ReIm>> {
    rows.iter().map(|r| to_wire_vec(r)).collect()
}

/// File holding a bare list of complex values (interpolation targets,
/// multiplier samples): `{"values": [{"re": r, "im": i}, ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComplexListFile {
    pub values: Vec<ReIm>,
}

impl ComplexListFile {
    pub fn values(&self) -> Vec<Complex64> {
        from_wire_vec(&self.values)
    }
}
