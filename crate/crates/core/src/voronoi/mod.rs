//! Bessel functions of order one and the Bessel-series formulas for the
//! divisor and circle problems.

mod bessel;
mod series;

pub use bessel::{
    bessel_j1, bessel_j1_with, bessel_k1, bessel_k1_with, bessel_y1, bessel_y1_with, j1_asymptotic,
    j1_series, k1_asymptotic, k1_series, y1_asymptotic, y1_series, BesselAccuracy,
};
pub use series::{
    divisor_delta, sierpinski_sum, voronoi_cosine_term, voronoi_full, voronoi_truncated,
    DeltaConvention, VoronoiSum,
};
