use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A nonnegative real sample point `x`, stored as its integer part and its
/// fractional part so that `⌊x/n⌋ = ⌊⌊x⌋/n⌋` is computed without any
/// floating-point floor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Abscissa {
    floor: u64,
    frac: f64,
}

impl Abscissa {
    pub fn integer(n: u64) -> Self {
        Self {
            floor: n,
            frac: 0.0,
        }
    }

    /// `n + 1/2`, the canonical non-integer sample point.
    pub fn half_above(n: u64) -> Self {
        Self {
            floor: n,
            frac: 0.5,
        }
    }

    pub fn from_parts(floor: u64, frac: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&frac) {
            return Err(Error::InvalidArgument(format!(
                "fractional part {frac} outside [0, 1)"
            )));
        }
        Ok(Self { floor, frac })
    }

    pub fn from_f64(x: f64) -> Result<Self> {
        if !x.is_finite() || !(0.0..1.8e19).contains(&x) {
            return Err(Error::InvalidArgument(format!(
                "x = {x} is not a valid sample point"
            )));
        }
        let f = x.floor();
        Ok(Self {
            floor: f as u64,
            frac: x - f,
        })
    }

    pub fn floor(&self) -> u64 {
        self.floor
    }

    pub fn frac(&self) -> f64 {
        self.frac
    }

    pub fn value(&self) -> f64 {
        self.floor as f64 + self.frac
    }

    pub fn is_integer(&self) -> bool {
        self.frac == 0.0
    }

    /// Shifts by `±delta` with `0 < delta < 1`; used for midpoint averaging
    /// at integers.
    pub fn shifted(&self, delta: f64) -> Result<Self> {
        let f = self.frac + delta;
        if f >= 1.0 {
            Self::from_parts(self.floor + 1, f - 1.0)
        } else if f < 0.0 {
            if self.floor == 0 {
                return Err(Error::InvalidArgument("shift below zero".into()));
            }
            Self::from_parts(self.floor - 1, f + 1.0)
        } else {
            Self::from_parts(self.floor, f)
        }
    }
}

impl From<u64> for Abscissa {
    fn from(n: u64) -> Self {
        Abscissa::integer(n)
    }
}

impl FromStr for Abscissa {
    type Err = Error;

    /// Parses decimal notation exactly for the integer part; scientific
    /// notation falls back to `f64`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidArgument(format!("cannot parse x = {s:?}"));
        if s.contains(['e', 'E']) {
            let v: f64 = s.parse().map_err(|_| bad())?;
            return Abscissa::from_f64(v);
        }
        let (int_part, frac_part) = match s.split_once('.') {
            Some((i, f)) => (i, f),
            None => (s, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        if !int_part.chars().all(|c| c.is_ascii_digit())
            || !frac_part.chars().all(|c| c.is_ascii_digit())
        {
            return Err(bad());
        }
        let floor = if int_part.is_empty() {
            0
        } else {
            int_part.parse::<u64>().map_err(|_| bad())?
        };
        let frac = if frac_part.is_empty() {
            0.0
        } else {
            format!("0.{frac_part}").parse::<f64>().map_err(|_| bad())?
        };
        // "0.99999999999999999" rounds to 1.0
        if frac >= 1.0 {
            return Ok(Abscissa {
                floor: floor + 1,
                frac: 0.0,
            });
        }
        Ok(Abscissa { floor, frac })
    }
}

impl fmt::Display for Abscissa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.frac == 0.0 {
            write!(f, "{}", self.floor)
        } else {
            let frac = format!("{}", self.frac);
            write!(f, "{}{}", self.floor, frac.trim_start_matches('0'))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_keeps_integer_part_exact() {
        let x: Abscissa = "100000000.5".parse().unwrap();
        assert_eq!(x.floor(), 100_000_000);
        assert_eq!(x.frac(), 0.5);
        let y: Abscissa = "9007199254740993".parse().unwrap();
        assert_eq!(y.floor(), 9_007_199_254_740_993);
        assert!(y.is_integer());
        assert!("-3".parse::<Abscissa>().is_err());
        assert!("1.2.3".parse::<Abscissa>().is_err());
        assert_eq!("1e3".parse::<Abscissa>().unwrap().floor(), 1000);
    }

    #[test]
    fn display_round_trips() {
        for s in ["10", "10.5", "0.25", "10000.5"] {
            let x: Abscissa = s.parse().unwrap();
            assert_eq!(x.to_string(), s);
        }
    }

    #[test]
    fn shifting_crosses_integers() {
        let x = Abscissa::integer(100);
        assert_eq!(x.shifted(-0.5).unwrap(), Abscissa::half_above(99));
        assert_eq!(x.shifted(0.5).unwrap(), Abscissa::half_above(100));
        assert_eq!(
            Abscissa::half_above(3).shifted(0.5).unwrap(),
            Abscissa::integer(4)
        );
    }
}
