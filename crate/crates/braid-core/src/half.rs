use std::fmt;

use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize, Serializer};

/// A number of the form `k/2`, stored as `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInteger(i64);

impl HalfInteger {
    pub fn from_twice(twice: i64) -> Self {
        HalfInteger(twice)
    }

    pub fn from_int(n: i64) -> Self {
        HalfInteger(2 * n)
    }

    pub fn twice(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn to_integer(self) -> Option<i64> {
        self.is_integer().then_some(self.0 / 2)
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl Serialize for HalfInteger {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        // integers stay numbers, halves become "k/2" strings
        match self.to_integer() {
            Some(n) => s.serialize_i64(n),
            None => s.serialize_str(&self.to_string()),
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum HalfRepr {
    Int(i64),
    Text(String),
}

impl<'de> Deserialize<'de> for HalfInteger {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match HalfRepr::deserialize(d)? {
            HalfRepr::Int(n) => Ok(HalfInteger::from_int(n)),
            HalfRepr::Text(s) => s
                .strip_suffix("/2")
                .and_then(|k| k.parse::<i64>().ok())
                .filter(|k| k % 2 != 0)
                .map(HalfInteger::from_twice)
                .ok_or_else(|| de::Error::custom(format!("expected an integer or \"k/2\", got {s:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display() {
        assert_eq!(HalfInteger::from_twice(6).to_string(), "3");
        assert_eq!(HalfInteger::from_twice(-1).to_string(), "-1/2");
        assert_eq!(HalfInteger::from_int(2).to_integer(), Some(2));
    }

    #[test]
    fn json() {
        use serde_json::{from_str, to_string};
        for twice in [-3, 0, 4, 7] {
            let h = HalfInteger::from_twice(twice);
            assert_eq!(from_str::<HalfInteger>(&to_string(&h).unwrap()).unwrap(), h);
        }
        assert_eq!(to_string(&HalfInteger::from_twice(3)).unwrap(), "\"3/2\"");
        assert!(from_str::<HalfInteger>("\"4/2\"").is_err());
    }
}
