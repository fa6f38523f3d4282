use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

/// A formal product `prod (t^order - 1)^exponent`, kept factored.
///
/// The canonical form merges equal orders and drops zero exponents, so
/// structural equality is equality of rational functions.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ZetaFunction {
    factors: BTreeMap<u64, i64>,
}

impl ZetaFunction {
    /// The empty product `1`.
    pub fn one() -> Self {
        ZetaFunction::default()
    }

    pub fn from_factors(factors: impl IntoIterator<Item = (u64, i64)>) -> Self {
        let mut z = ZetaFunction::one();
        for (order, exp) in factors {
            z.multiply_factor(order, exp);
        }
        z
    }

    /// Multiplies in `(t^order - 1)^exponent`.
    ///
    /// # Panics
    /// Panics if `order` is 0.
    pub fn multiply_factor(&mut self, order: u64, exponent: i64) {
        assert!(order > 0, "factor order must be positive");
        if exponent == 0 {
            return;
        }
        let e = self.factors.entry(order).or_insert(0);
        *e += exponent;
        if *e == 0 {
            self.factors.remove(&order);
        }
    }

    pub fn multiply(&mut self, other: &ZetaFunction) {
        for (&o, &e) in &other.factors {
            self.multiply_factor(o, e);
        }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Factors in canonical order: decreasing `order`.
    pub fn factors(&self) -> Vec<(u64, i64)> {
        self.factors.iter().rev().map(|(&o, &e)| (o, e)).collect()
    }

    /// Degree of the rational function, `sum order * exponent`.
    pub fn degree(&self) -> i128 {
        self.factors
            .iter()
            .map(|(&o, &e)| i128::from(o) * i128::from(e))
            .sum()
    }
}

impl fmt::Display for ZetaFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .factors()
            .iter()
            .map(|(o, e)| format!("(t^{o}-1)^{e}"))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

impl Serialize for ZetaFunction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.factors().serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let z = ZetaFunction::from_factors([(1, -2), (2, 2), (1, -2), (3, 0)]);
        assert_eq!(z.factors(), vec![(2, 2), (1, -4)]);
        assert_eq!(z.to_string(), "(t^2-1)^2 (t^1-1)^-4");
        assert_eq!(z.degree(), 0);
        let w = ZetaFunction::from_factors([(2, 1), (1, -4), (2, 1)]);
        assert_eq!(z, w);
    }

    #[test]
    fn cancellation_gives_one() {
        let z = ZetaFunction::from_factors([(5, 3), (5, -3)]);
        assert!(z.is_one());
        assert_eq!(z.to_string(), "1");
        assert_eq!(serde_json::to_string(&z).unwrap(), "[]");
    }
}
