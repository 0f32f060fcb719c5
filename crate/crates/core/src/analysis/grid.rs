use crate::abscissa::Abscissa;
use crate::error::{invalid, Result};

/// Geometric grid ⌊lo·rⁱ⌋ + ½ up to `hi`, ascending and without repeats.
pub fn log_grid(lo: f64, hi: f64, ratio: f64) -> Result<Vec<Abscissa>> {
    if !(lo >= 1.0 && hi >= lo && hi.is_finite()) {
        return invalid(format!("grid needs 1 <= lo <= hi, got [{lo}, {hi}]"));
    }
    if !(ratio > 1.0 && ratio.is_finite()) {
        return invalid(format!("grid ratio must exceed 1, got {ratio}"));
    }
    let mut out: Vec<Abscissa> = Vec::new();
    let mut v = lo;
    let mut i = 0i32;
    while v <= hi {
        let p = Abscissa::half_above(v.floor() as u64);
        if p.value() > hi {
            break;
        }
        if out.last().is_none_or(|last| last.floor() < p.floor()) {
            out.push(p);
        }
        i += 1;
        v = lo * ratio.powi(i);
    }
    if out.is_empty() {
        return invalid(format!("grid [{lo}, {hi}] contains no half-integer point"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_offsets_and_ratio() {
        let g = log_grid(100.0, 1000.0, 1.2).unwrap();
        assert_eq!(g[0].value(), 100.5);
        assert!(g.iter().all(|p| p.frac() == 0.5));
        assert!(g.windows(2).all(|w| w[0].floor() < w[1].floor()));
        assert!(g.last().unwrap().value() <= 1000.0);
        assert_eq!(g.len(), 13);
    }

    #[test]
    fn small_ratios_do_not_repeat() {
        let g = log_grid(1.0, 10.0, 1.01).unwrap();
        assert_eq!(g.len(), 9);
        assert!(log_grid(10.0, 5.0, 1.2).is_err());
        assert!(log_grid(10.0, 50.0, 1.0).is_err());
        assert!(log_grid(10.0, 10.2, 1.2).is_err());
    }
}
