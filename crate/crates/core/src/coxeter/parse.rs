use super::graph::CoxeterGraph;
use super::types::{graph_of_types, Family, TypeLabel};
use crate::error::{Error, Result};

/// Parse a group spec such as `D5xA2`, `I2(7)` or `1` into component types.
///
/// Grammar: `TERM ('x' TERM)*` with TERM one of `A<n>`, `B<n>`, `C<n>`, `D<n>`,
/// `E6`..`E8`, `F4`, `G2`, `H3`, `H4`, `I2(<m>)`, or `1` (the trivial group).
/// Aliases: `C_n = B_n`, `G2 = I2(6)`, `B1 = A1`, `D2 = A1xA1`, `D3 = A3`,
/// and `A0 = B0 = D0 = 1`.
pub fn parse_types(text: &str) -> Result<Vec<TypeLabel>> {
    let syntax = |reason: &str| Error::Syntax { spec: text.to_string(), reason: reason.to_string() };
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(syntax("empty spec"));
    }
    let mut out = Vec::new();
    for term in trimmed.split('x') {
        let term = term.trim();
        if term.is_empty() {
            return Err(syntax("empty term"));
        }
        out.extend(parse_term(term).map_err(|e| match e {
            Error::Syntax { reason, .. } => syntax(&reason),
            other => other,
        })?);
    }
    Ok(out)
}

/// Parse a group spec into the disjoint union of standard component graphs.
pub fn parse_group_spec(text: &str) -> Result<CoxeterGraph> {
    Ok(graph_of_types(&parse_types(text)?))
}

fn parse_term(term: &str) -> Result<Vec<TypeLabel>> {
    let bad = |reason: String| Error::Syntax { spec: term.to_string(), reason };
    if term == "1" {
        return Ok(Vec::new());
    }
    if let Some(rest) = term.strip_prefix("I2") {
        let inner = rest
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| bad(format!("expected I2(<m>), got {term:?}")))?;
        let m: u32 = inner.trim().parse().map_err(|_| bad(format!("bad dihedral label {inner:?}")))?;
        if m < 3 {
            return Err(Error::NotFinite(format!("I2({m}) is not an irreducible finite dihedral type")));
        }
        return Ok(vec![TypeLabel::dihedral(m)]);
    }
    let mut chars = term.chars();
    let letter = chars.next().ok_or_else(|| bad("empty term".into()))?;
    let digits = chars.as_str();
    if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
        return Err(bad(format!("expected a rank after {letter:?} in {term:?}")));
    }
    let n: u32 = digits.parse().map_err(|_| bad(format!("rank {digits:?} too large")))?;
    let family = match letter {
        'A' => Family::A,
        'B' | 'C' => Family::B,
        'D' => Family::D,
        'E' => Family::E,
        'F' => Family::F,
        'G' => {
            if n != 2 {
                return Err(Error::RankOutOfRange(term.to_string()));
            }
            return Ok(vec![TypeLabel::dihedral(6)]);
        }
        'H' => Family::H,
        _ => return Err(bad(format!("unknown family {letter:?}"))),
    };
    match (family, n) {
        (Family::A | Family::B | Family::D, 0) => Ok(Vec::new()),
        (Family::B, 1) => Ok(vec![TypeLabel::a(1)]),
        (Family::D, 2) => Ok(vec![TypeLabel::a(1), TypeLabel::a(1)]),
        (Family::D, 3) => Ok(vec![TypeLabel::a(3)]),
        _ => TypeLabel::new(family, n).map(|t| vec![t]).map_err(|_| Error::RankOutOfRange(term.to_string())),
    }
}
