use num_rational::Rational64;
use num_traits::{Signed, Zero};

pub type Q = Rational64;

/// Always `p/q`, denominator included, so integers read `2/1`.
pub fn format_q(q: Q) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn parse_q(s: &str) -> Option<Q> {
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim().parse::<i64>().ok()?, q.trim().parse::<i64>().ok()?),
        None => (s.trim().parse::<i64>().ok()?, 1),
    };
    if q == 0 {
        return None;
    }
    Some(Q::new(p, q))
}

pub fn is_odd_integer(q: Q) -> bool {
    q.is_integer() && q.numer() % 2 != 0
}

/// Greatest common divisor of a list of integers (0 for an empty or all-zero list).
pub fn gcd_all(xs: &[i64]) -> i64 {
    xs.iter().fold(0i64, |g, &x| num_integer::gcd(g, x))
}

pub fn abs(q: Q) -> Q {
    if q.is_negative() {
        -q
    } else {
        q
    }
}

pub fn is_zero(q: &Q) -> bool {
    q.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_is_written_exactly() {
        assert_eq!(format_q(Q::new(1, 2)), "1/2");
        assert_eq!(format_q(Q::new(-4, 2)), "-2/1");
        assert_eq!(parse_q("1/2"), Some(Q::new(1, 2)));
        assert_eq!(parse_q("3"), Some(Q::from(3)));
        assert_eq!(parse_q("1/0"), None);
    }

    #[test]
    fn odd_integers() {
        assert!(is_odd_integer(Q::from(-3)));
        assert!(!is_odd_integer(Q::from(2)));
        assert!(!is_odd_integer(Q::new(1, 2)));
    }
}
