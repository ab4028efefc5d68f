//! Angle arguments: decimal radians or rational multiples of π.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// An angle in radians, remembering the `k·π/n` form it was written in.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Angle {
    radians: f64,
    multiple_of_pi: Option<(i64, u64)>,
}

impl Angle {
    pub fn radians(value: f64) -> Self {
        Angle {
            radians: value,
            multiple_of_pi: None,
        }
    }

    /// `numer·π/denom`, evaluated as `(numer·π)/denom`.
    pub fn pi_fraction(numer: i64, denom: u64) -> Self {
        Angle {
            radians: numer as f64 * PI / denom as f64,
            multiple_of_pi: Some((numer, denom)),
        }
    }

    pub fn value(&self) -> f64 {
        self.radians
    }

    pub fn multiple_of_pi(&self) -> Option<(i64, u64)> {
        self.multiple_of_pi
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.multiple_of_pi {
            Some((1, 1)) => f.write_str("pi"),
            Some((-1, 1)) => f.write_str("-pi"),
            Some((n, 1)) => write!(f, "{n}pi"),
            Some((1, d)) => write!(f, "pi/{d}"),
            Some((-1, d)) => write!(f, "-pi/{d}"),
            Some((n, d)) => write!(f, "{n}pi/{d}"),
            None => write!(f, "{}", self.radians),
        }
    }
}

impl FromStr for Angle {
    type Err = Error;

    /// Accepts `0.75`, `pi`, `pi/3`, `2pi/3`, `2*pi/3`, `-pi/4` and `π` for `pi`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let syntax = || Error::AngleSyntax(s.to_string());
        let text: String = s.trim().to_lowercase().replace('π', "pi").replace(' ', "");
        let Some(pos) = text.find("pi") else {
            return text.parse::<f64>().map(Angle::radians).map_err(|_| syntax());
        };
        let (head, tail) = (&text[..pos], &text[pos + 2..]);
        let head = head.strip_suffix('*').unwrap_or(head);
        let numer: i64 = match head {
            "" | "+" => 1,
            "-" => -1,
            digits => digits.parse().map_err(|_| syntax())?,
        };
        let denom: u64 = match tail {
            "" => 1,
            rest => rest
                .strip_prefix('/')
                .and_then(|d| d.parse().ok())
                .filter(|&d| d > 0)
                .ok_or_else(syntax)?,
        };
        Ok(Angle::pi_fraction(numer, denom))
    }
}

impl Serialize for Angle {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Angle {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Number(f64),
            Text(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Number(v) => Ok(Angle::radians(v)),
            Raw::Text(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}
