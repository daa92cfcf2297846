//! Side and tangent length lists.

use serde::Serialize;

use crate::error::{Error, Result};

/// Ordered cyclic side lengths `a1..an` of a polygon, `n >= 3`.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct SideLengths(Vec<f64>);

impl SideLengths {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.len() < 3 {
            return Err(Error::TooFewSides(values.len()));
        }
        if let Some((index, &value)) = values
            .iter()
            .enumerate()
            .find(|(_, v)| !(v.is_finite() && **v > 0.0))
        {
            return Err(Error::NonpositiveSide { index: index + 1, value });
        }
        Ok(SideLengths(values))
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_odd(&self) -> bool {
        self.0.len() % 2 == 1
    }

    pub fn perimeter(&self) -> f64 {
        self.0.iter().sum()
    }

    pub fn semiperimeter(&self) -> f64 {
        self.perimeter() / 2.0
    }

    pub fn scaled(&self, factor: f64) -> Result<Self> {
        SideLengths::new(self.0.iter().map(|a| a * factor).collect())
    }
}

/// Tangent lengths `t1..tn`: `tj` is the distance from vertex `j` to either
/// of its two tangency points, so that `aj = tj + t(j+1)` cyclically.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct TangentLengths(Vec<f64>);

impl TangentLengths {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if let Some((index, &value)) = values
            .iter()
            .enumerate()
            .find(|(_, v)| !(v.is_finite() && **v > 0.0))
        {
            return Err(Error::NonpositiveTangent { index: index + 1, value });
        }
        Ok(TangentLengths(values))
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn semiperimeter(&self) -> f64 {
        self.0.iter().sum()
    }

    /// Sides induced by consecutive pairs, `aj = tj + t(j+1)`.
    pub fn sides(&self) -> Result<SideLengths> {
        let n = self.0.len();
        SideLengths::new((0..n).map(|j| self.0[j] + self.0[(j + 1) % n]).collect())
    }

    pub fn scaled(&self, factor: f64) -> Result<Self> {
        TangentLengths::new(self.0.iter().map(|t| t * factor).collect())
    }
}

/// Rotate a cyclic list so that it starts at index `k`.
pub fn cyclic_rotate<T: Clone>(values: &[T], k: usize) -> Result<Vec<T>> {
    if k >= values.len() {
        return Err(Error::IndexOutOfRange { index: k, len: values.len() });
    }
    let mut out = Vec::with_capacity(values.len());
    out.extend_from_slice(&values[k..]);
    out.extend_from_slice(&values[..k]);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotate_examples() {
        assert_eq!(cyclic_rotate(&[1, 2, 3], 0).unwrap(), vec![1, 2, 3]);
        assert_eq!(cyclic_rotate(&[1, 2, 3], 1).unwrap(), vec![2, 3, 1]);
        assert_eq!(cyclic_rotate(&[3, 4, 5], 2).unwrap(), vec![5, 3, 4]);
        assert_eq!(
            cyclic_rotate(&[1, 2, 3], 3),
            Err(Error::IndexOutOfRange { index: 3, len: 3 })
        );
    }

    #[test]
    fn side_validation() {
        assert_eq!(SideLengths::new(vec![3.0, 4.0]), Err(Error::TooFewSides(2)));
        assert_eq!(
            SideLengths::new(vec![3.0, 0.0, 5.0]),
            Err(Error::NonpositiveSide { index: 2, value: 0.0 })
        );
        assert!(SideLengths::new(vec![1.0, f64::NAN, 1.0]).is_err());
        assert!(SideLengths::new(vec![1.0, f64::INFINITY, 1.0]).is_err());
        let s = SideLengths::new(vec![3.0, 4.0, 5.0]).unwrap();
        assert_eq!(s.semiperimeter(), 6.0);
        assert!(s.is_odd());
    }

    #[test]
    fn tangents_validation_and_sides() {
        assert!(TangentLengths::new(vec![1.0, -1.0, 2.0]).is_err());
        let t = TangentLengths::new(vec![2.0, 1.0, 3.0]).unwrap();
        assert_eq!(t.semiperimeter(), 6.0);
        assert_eq!(t.sides().unwrap().values(), &[3.0, 4.0, 5.0]);
    }
}
