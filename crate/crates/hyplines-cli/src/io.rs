//! JSON schemas of the command-line surface.
//!
//! Vectors are arrays of numbers (finite doubles, no NaN/Inf):
//! * curve: `{"h": step, "t_start": t0, "samples": [{"p": [...], "v": [...]}]}`
//!   (`t_start` optional, default 0);
//! * geodesic: `{"minus": [...], "plus": [...]}` with unit vectors of `ℝ^{n+1}`;
//! * point-direction: `{"p": [...], "v": [...]}` with ambient vectors of `ℝ^{n+2}`;
//! * minitwistor: `{"v": [...], "x": [...]}` with vectors of `ℝ^{n+1}`, `v` unit, `⟨v,x⟩ = 0`;
//! * velocity: `{"x": [...], "y": [...]}` with coordinate vectors of `ℝⁿ`.

use nalgebra::DVector;
use serde::{Deserialize, Serialize};

use hyplines::curves::CurveInG;
use hyplines::hyperbolic::{HPoint, IdealPoint, UnitTangent};
use hyplines::linespace::OrientedGeodesic;

#[derive(Debug, Serialize, Deserialize)]
pub struct PointDirJson {
    pub p: Vec<f64>,
    pub v: Vec<f64>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct PairJson {
    pub minus: Vec<f64>,
    pub plus: Vec<f64>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct MinitwistorJson {
    pub v: Vec<f64>,
    pub x: Vec<f64>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct VelocityJson {
    pub x: Vec<f64>,
    pub y: Vec<f64>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CurveJson {
    pub h: f64,
    #[serde(default)]
    pub t_start: f64,
    pub samples: Vec<PointDirJson>,
}

pub fn all_finite(values: &[f64]) -> bool {
    values.iter().all(|v| v.is_finite())
}

pub fn vector(values: &[f64]) -> DVector<f64> {
    DVector::from_column_slice(values)
}

pub fn vec_of(v: &DVector<f64>) -> Vec<f64> {
    v.iter().cloned().collect()
}

impl PointDirJson {
    pub fn to_unit_tangent(&self) -> hyplines::Result<UnitTangent> {
        UnitTangent::new(HPoint::new(vector(&self.p))?, vector(&self.v))
    }

    pub fn from_unit_tangent(t: &UnitTangent) -> Self {
        PointDirJson { p: vec_of(t.base().coords()), v: vec_of(t.vec()) }
    }
}

impl PairJson {
    pub fn to_geodesic(&self) -> hyplines::Result<OrientedGeodesic> {
        OrientedGeodesic::new(IdealPoint::new(vector(&self.minus))?, IdealPoint::new(vector(&self.plus))?)
    }

    pub fn from_geodesic(geo: &OrientedGeodesic) -> Self {
        PairJson { minus: vec_of(geo.minus().dir()), plus: vec_of(geo.plus().dir()) }
    }
}

impl CurveJson {
    pub fn to_curve(&self) -> hyplines::Result<CurveInG> {
        let samples = self
            .samples
            .iter()
            .map(|s| s.to_unit_tangent())
            .collect::<hyplines::Result<Vec<_>>>()?;
        CurveInG::new(self.h, self.t_start, samples)
    }

    pub fn finite(&self) -> bool {
        self.h.is_finite()
            && self.t_start.is_finite()
            && self.samples.iter().all(|s| all_finite(&s.p) && all_finite(&s.v))
    }
}
