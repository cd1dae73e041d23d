use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use thiserror::Error;

/// Largest number of fraction digits accepted in decimal notation.
const MAX_FRACTION_DIGITS: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TauError {
    #[error("denominator must be positive")]
    ZeroDenominator,
    #[error("tau = {p}/{q} is outside [0, 1)")]
    OutOfRange { p: u64, q: u64 },
    #[error("decimal tau accepts at most {MAX_FRACTION_DIGITS} fraction digits, got {0}")]
    TooManyDigits(usize),
    #[error("cannot parse tau from {0:?}; expected a decimal such as 0.9 or a fraction such as 9/10")]
    Malformed(String),
}

/// Rational exponent `p/q` in `[0, 1)`, always stored in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Tau {
    p: u32,
    q: u32,
}

impl Tau {
    pub const ZERO: Tau = Tau { p: 0, q: 1 };

    pub fn new(p: u32, q: u32) -> Result<Self, TauError> {
        if q == 0 {
            return Err(TauError::ZeroDenominator);
        }
        if p >= q {
            return Err(TauError::OutOfRange {
                p: p.into(),
                q: q.into(),
            });
        }
        let g = p.gcd(&q);
        Ok(Tau { p: p / g, q: q / g })
    }

    pub fn numer(self) -> u32 {
        self.p
    }

    pub fn denom(self) -> u32 {
        self.q
    }

    pub fn is_zero(self) -> bool {
        self.p == 0
    }

    /// Approximate value, for display only.
    pub fn as_f64(self) -> f64 {
        f64::from(self.p) / f64::from(self.q)
    }

    fn parse_decimal(text: &str) -> Result<Self, TauError> {
        let malformed = || TauError::Malformed(text.to_string());
        let (int_part, frac_part) = match text.split_once('.') {
            Some((i, f)) => (i, f),
            None => (text, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(malformed());
        }
        if !int_part.bytes().all(|b| b.is_ascii_digit())
            || !frac_part.bytes().all(|b| b.is_ascii_digit())
        {
            return Err(malformed());
        }
        if frac_part.len() > MAX_FRACTION_DIGITS {
            return Err(TauError::TooManyDigits(frac_part.len()));
        }
        let int_value: u64 = if int_part.is_empty() {
            0
        } else {
            int_part.parse().map_err(|_| malformed())?
        };
        let q = 10u32.pow(frac_part.len() as u32);
        let frac_value: u32 = if frac_part.is_empty() {
            0
        } else {
            frac_part.parse().map_err(|_| malformed())?
        };
        if int_value != 0 {
            return Err(TauError::OutOfRange {
                p: int_value * u64::from(q) + u64::from(frac_value),
                q: q.into(),
            });
        }
        Tau::new(frac_value, q)
    }

    fn parse_fraction(text: &str, num: &str, den: &str) -> Result<Self, TauError> {
        let parse = |s: &str| {
            let s = s.trim();
            if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
                return Err(TauError::Malformed(text.to_string()));
            }
            s.parse::<u32>()
                .map_err(|_| TauError::Malformed(text.to_string()))
        };
        Tau::new(parse(num)?, parse(den)?)
    }
}

impl FromStr for Tau {
    type Err = TauError;

    /// Accepts `"0.9"`, `".75"`, `"0"` or an explicit `"p/q"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let text = s.trim();
        match text.split_once('/') {
            Some((num, den)) => Tau::parse_fraction(text, num, den),
            None => Tau::parse_decimal(text),
        }
    }
}

impl fmt::Display for Tau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}
