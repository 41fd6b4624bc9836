//! Exact rationals and their `"p/q"` wire form.
//!
//! Every slope, bound and inequality side in the crate is a [`Rational`].
//! The rendered form is always `numerator/denominator` in lowest terms with a
//! positive denominator, integers included (`"20/1"`).

use num_rational::Ratio;

pub type Rational = Ratio<i128>;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n as i128)
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(n as i128, d as i128)
}

pub fn render(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn parse(s: &str) -> Option<Rational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<i128>().ok()?, d.trim().parse::<i128>().ok()?),
        None => (s.trim().parse::<i128>().ok()?, 1),
    };
    if d == 0 {
        return None;
    }
    Some(Rational::new(n, d))
}

/// `serde(with = ...)` adapter for a single rational field.
pub mod serde_str {
    use super::Rational;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::render(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        super::parse(&s).ok_or_else(|| D::Error::custom(format!("bad rational {s:?}")))
    }
}

/// Same as [`serde_str`] for a list of rationals.
pub mod serde_str_vec {
    use super::Rational;
    use serde::{de::Error, ser::SerializeSeq, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(qs: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(qs.len()))?;
        for q in qs {
            seq.serialize_element(&super::render(q))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        Vec::<String>::deserialize(d)?
            .into_iter()
            .map(|s| super::parse(&s).ok_or_else(|| D::Error::custom(format!("bad rational {s:?}"))))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_lowest_terms_with_positive_denominator() {
        assert_eq!(render(&frac(96, 5)), "96/5");
        assert_eq!(render(&int(20)), "20/1");
        assert_eq!(render(&frac(6, -4)), "-3/2");
        assert_eq!(render(&frac(64, 6)), "32/3");
    }

    #[test]
    fn parse_inverts_render() {
        for q in [frac(96, 5), int(0), frac(-7, 3), int(1_000_003)] {
            assert_eq!(parse(&render(&q)), Some(q));
        }
        assert_eq!(parse("4"), Some(int(4)));
        assert_eq!(parse("1/0"), None);
        assert_eq!(parse("x/2"), None);
    }
}
