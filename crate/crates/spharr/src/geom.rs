//! Geometric primitives on the d-sphere: unit vectors, uniform sampling,
//! side predicates, separation counts, vertex construction, and central
//! projection.
//!
//! A great (d-1)-sphere of S^d is represented by its unit normal, so the
//! same `UnitVector` type doubles as a point and as a circle/sphere.

use nalgebra::DMatrix;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};

/// Inner products with magnitude at most this count as "on the circle".
pub const EPS_ON: f64 = 1e-9;

/// Smallest admissible singular value of the stacked normal matrix when
/// intersecting great spheres; below this the normals count as dependent.
pub const EPS_RANK: f64 = 1e-9;

/// Input vectors must be unit within this tolerance; they are then
/// re-normalized exactly.
pub const UNIT_NORM_TOL: f64 = 1e-9;

/// Which side of a circle a point lies on (`Zero` = on the circle).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Neg,
    Zero,
    Pos,
}

impl Sign {
    /// Classify an inner product with the [`EPS_ON`] tolerance.
    pub fn of(x: f64) -> Sign {
        if x > EPS_ON {
            Sign::Pos
        } else if x < -EPS_ON {
            Sign::Neg
        } else {
            Sign::Zero
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Neg => Sign::Pos,
            Sign::Zero => Sign::Zero,
            Sign::Pos => Sign::Neg,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Neg => -1,
            Sign::Zero => 0,
            Sign::Pos => 1,
        }
    }
}

/// A closed hemisphere selector (strict two-valued side, unlike [`Sign`]).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Pos,
    Neg,
}

impl Side {
    pub fn sign(self) -> Sign {
        match self {
            Side::Pos => Sign::Pos,
            Side::Neg => Sign::Neg,
        }
    }

    pub fn opposite(self) -> Side {
        match self {
            Side::Pos => Side::Neg,
            Side::Neg => Side::Pos,
        }
    }

    pub fn factor(self) -> f64 {
        match self {
            Side::Pos => 1.0,
            Side::Neg => -1.0,
        }
    }
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::Pos => write!(f, "+"),
            Side::Neg => write!(f, "-"),
        }
    }
}

/// A point on S^d stored as d+1 Euclidean coordinates of unit norm.
#[derive(Clone, Debug, PartialEq)]
pub struct UnitVector(Vec<f64>);

impl UnitVector {
    /// Accepts coordinates whose norm is 1 within [`UNIT_NORM_TOL`] and
    /// re-normalizes them exactly.
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        let norm = l2_norm(&coords);
        if (norm - 1.0).abs() > UNIT_NORM_TOL {
            return Err(Error::Precondition(format!(
                "vector norm {norm} is not 1 within {UNIT_NORM_TOL}"
            )));
        }
        Ok(Self::scaled(coords, norm))
    }

    /// Normalizes an arbitrary nonzero vector.
    pub fn from_unnormalized(coords: Vec<f64>) -> Result<Self> {
        let norm = l2_norm(&coords);
        if norm < 1e-12 {
            return Err(Error::Degenerate(
                "cannot normalize a (near-)zero vector".into(),
            ));
        }
        Ok(Self::scaled(coords, norm))
    }

    fn scaled(mut coords: Vec<f64>, norm: f64) -> Self {
        for x in &mut coords {
            *x /= norm;
        }
        UnitVector(coords)
    }

    /// The south pole (0, ..., 0, -1) of S^d.
    pub fn south_pole(d: usize) -> Self {
        let mut coords = vec![0.0; d + 1];
        coords[d] = -1.0;
        UnitVector(coords)
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    /// Dimension d of the sphere the point lives on (one less than the
    /// coordinate count).
    pub fn ambient_dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn dot(&self, other: &UnitVector) -> f64 {
        dot(&self.0, &other.0)
    }

    pub fn negated(&self) -> UnitVector {
        UnitVector(self.0.iter().map(|x| -x).collect())
    }
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn l2_norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

pub(crate) fn cross3(a: &[f64], b: &[f64]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// An arrangement of n great (d-1)-spheres on S^d, given by unit normals.
#[derive(Clone, Debug)]
pub struct GreatSphereArrangement {
    dimension: usize,
    normals: Vec<UnitVector>,
}

impl GreatSphereArrangement {
    pub fn new(dimension: usize, normals: Vec<UnitVector>) -> Result<Self> {
        if dimension < 2 {
            return Err(Error::Precondition(format!(
                "arrangement dimension must be at least 2, got {dimension}"
            )));
        }
        for (i, normal) in normals.iter().enumerate() {
            if normal.ambient_dim() != dimension {
                return Err(Error::Precondition(format!(
                    "normal {i} has {} coordinates, expected {}",
                    normal.coords().len(),
                    dimension + 1
                )));
            }
        }
        Ok(GreatSphereArrangement { dimension, normals })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Number of great spheres.
    pub fn len(&self) -> usize {
        self.normals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.normals.is_empty()
    }

    pub fn normals(&self) -> &[UnitVector] {
        &self.normals
    }

    pub fn normal(&self, i: usize) -> &UnitVector {
        &self.normals[i]
    }
}

/// Uniform point on S^d via normalized Gaussian coordinates; resamples on
/// the (practically impossible) near-zero draw.
pub fn sample_unit_vector<R: Rng + ?Sized>(d: usize, rng: &mut R) -> UnitVector {
    assert!(d >= 1, "sphere dimension must be at least 1");
    loop {
        let coords: Vec<f64> = (0..=d).map(|_| rng.sample(StandardNormal)).collect();
        if let Ok(v) = UnitVector::from_unnormalized(coords) {
            return v;
        }
    }
}

/// Which side of the great sphere with the given normal a point lies on.
pub fn side(normal: &UnitVector, point: &UnitVector) -> Sign {
    assert_eq!(
        normal.coords().len(),
        point.coords().len(),
        "dimension mismatch in side predicate"
    );
    Sign::of(normal.dot(point))
}

/// Number of non-excluded great spheres separating x from y, i.e. with a
/// strict sign flip between the two points.
///
/// This equals the crossing count of the geodesic arc from x to y; both
/// points must lie strictly off every counted sphere.
pub fn separation_count(
    x: &UnitVector,
    y: &UnitVector,
    arr: &GreatSphereArrangement,
    exclude: &[usize],
) -> Result<usize> {
    let mut count = 0;
    for (i, normal) in arr.normals().iter().enumerate() {
        if exclude.contains(&i) {
            continue;
        }
        let sx = side(normal, x);
        let sy = side(normal, y);
        if sx == Sign::Zero || sy == Sign::Zero {
            return Err(Error::OnCircle { circle: i });
        }
        if sx != sy {
            count += 1;
        }
    }
    Ok(count)
}

/// The two antipodal intersection points of d great (d-1)-spheres on S^d.
///
/// The kernel direction of the stacked d x (d+1) normal matrix is computed
/// by cofactor expansion (the generalized cross product); for d = 2 this is
/// the ordinary cross product. The first returned vector has its last
/// nonzero coordinate positive, so vertex identities are reproducible.
pub fn vertex_pair(normals: &[UnitVector]) -> Result<(UnitVector, UnitVector)> {
    let d = normals.len();
    assert!(d >= 1, "need at least one normal");
    let ambient = d + 1;
    for normal in normals {
        assert_eq!(
            normal.coords().len(),
            ambient,
            "vertex_pair: normals of S^d must have d+1 coordinates"
        );
    }

    let stacked = DMatrix::from_fn(d, ambient, |r, c| normals[r].coords()[c]);
    let sigma_min = stacked
        .clone()
        .singular_values()
        .iter()
        .fold(f64::INFINITY, |a, &b| a.min(b));
    if sigma_min <= EPS_RANK {
        return Err(Error::Degenerate(format!(
            "normals are rank-deficient (smallest singular value {sigma_min:.3e})"
        )));
    }

    let mut kernel = vec![0.0; ambient];
    for i in 0..ambient {
        let minor = DMatrix::from_fn(d, d, |r, c| {
            normals[r].coords()[if c < i { c } else { c + 1 }]
        });
        let det = minor.determinant();
        kernel[i] = if i % 2 == 0 { det } else { -det };
    }
    let v = UnitVector::from_unnormalized(kernel)?;

    let last_nonzero = v
        .coords()
        .iter()
        .rposition(|&x| x != 0.0)
        .expect("normalized vector has a nonzero coordinate");
    let first = if v.coords()[last_nonzero] < 0.0 {
        v.negated()
    } else {
        v
    };
    let second = first.negated();
    Ok((first, second))
}

/// Central projection of a point of S^2 onto the plane z = +1 or z = -1.
pub fn central_project(p: &UnitVector, plane: Side) -> Result<[f64; 2]> {
    assert_eq!(p.coords().len(), 3, "central projection is defined on S^2");
    let z = p.coords()[2];
    if z.abs() <= EPS_ON {
        return Err(Error::OnEquator);
    }
    let factor = plane.factor() / z;
    Ok([p.coords()[0] * factor, p.coords()[1] * factor])
}

/// An orthonormal basis (u, w) of the plane orthogonal to a unit 3-vector,
/// with (u, w, normal) right-handed. Points of the great circle are
/// u cos(t) + w sin(t); the forward tangent at x is normal x x.
pub fn orthonormal_frame(normal: &UnitVector) -> ([f64; 3], [f64; 3]) {
    let nc = normal.coords();
    assert_eq!(nc.len(), 3, "frames are built for S^2 only");
    let mut axis = [0.0; 3];
    let smallest = (0..3)
        .min_by(|&a, &b| nc[a].abs().total_cmp(&nc[b].abs()))
        .unwrap();
    axis[smallest] = 1.0;
    let raw = cross3(nc, &axis);
    let norm = l2_norm(&raw);
    let u = [raw[0] / norm, raw[1] / norm, raw[2] / norm];
    let w = cross3(nc, &u);
    (u, w)
}
