//! Exact rational arithmetic for the combinatorial invariants.
//!
//! Every exact invariant in this crate lies in (1/48)Z with small
//! numerators, so a reduced `i64` ratio is ample. Backed by
//! [`num_rational::Ratio`], which keeps values in lowest terms with a
//! positive denominator.

pub type Rational = num_rational::Ratio<i64>;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num, den)
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(n)
}

/// Serialized form used in reports: `"p"` for integers, `"p/q"` otherwise,
/// always in lowest terms.
pub fn to_string(r: &Rational) -> String {
    r.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_and_printed_in_lowest_terms() {
        let r = rat(4, 48);
        assert_eq!(*r.numer(), 1);
        assert_eq!(*r.denom(), 12);
        assert_eq!(to_string(&rat(-2, 48)), "-1/24");
        assert_eq!(to_string(&rat_int(0)), "0");
        assert_eq!(to_string(&rat(46, 48)), "23/24");
    }
}
