use std::fmt;

use crate::coeff::Coeff;

/// Writes a linear combination as `1 + 2*q - q^2`; an empty monomial string
/// stands for the unit. Zero combinations print as `0`.
pub(crate) fn write_terms<'a, C, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    C: Coeff,
    I: IntoIterator<Item = (String, &'a C)>,
{
    let mut first = true;
    for (mono, c) in terms {
        let neg = c.is_negative();
        match (first, neg) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        let mag = c.abs();
        if mono.is_empty() {
            write!(f, "{mag}")?;
        } else if mag.is_one() {
            f.write_str(&mono)?;
        } else {
            write!(f, "{mag}*{mono}")?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// `var`, `var^e`, or the empty string for `e = 0`.
pub(crate) fn power(var: &str, e: u32) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

pub(crate) fn join_factors(parts: &[String]) -> String {
    parts
        .iter()
        .filter(|p| !p.is_empty())
        .cloned()
        .collect::<Vec<_>>()
        .join("*")
}
