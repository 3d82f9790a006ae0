use crate::error::MagmaError;
use crate::magma::{Kind, Magma};

/// Labels carrying the indeterminate are flagged on parse.
pub fn label_is_neutro(label: &str) -> bool {
    label.contains('I')
}

/// Text form: header, label line, k table rows, optional zero trailer.
pub fn to_text(m: &Magma) -> String {
    let mut out = format!("magma {} kind={} order={}\n", m.name(), m.kind(), m.order());
    out.push_str(&m.labels().join(" "));
    out.push('\n');
    for a in 0..m.order() {
        let row: Vec<&str> = m.row(a).iter().map(|&c| m.label(c)).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    if let Some(z) = m.zero() {
        out.push_str(&format!("zero={}\n", m.label(z)));
    }
    out
}

fn perr(line: usize, msg: impl Into<String>) -> MagmaError {
    MagmaError::Parse { line, msg: msg.into() }
}

/// Parses one magma block starting at `lines[0]`; returns it with the number of
/// lines consumed. `offset` only shifts reported line numbers.
pub(crate) fn parse_block(lines: &[&str], offset: usize) -> Result<(Magma, usize), MagmaError> {
    let header = lines.first().ok_or_else(|| perr(offset + 1, "missing header"))?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    if parts.len() != 4 || parts[0] != "magma" {
        return Err(perr(offset + 1, "expected `magma <name> kind=<tag> order=<k>`"));
    }
    let name = parts[1];
    let kind: Kind = parts[2]
        .strip_prefix("kind=")
        .ok_or_else(|| perr(offset + 1, "missing kind="))?
        .parse()
        .map_err(|e: String| perr(offset + 1, e))?;
    let k: usize = parts[3].strip_prefix("order=").and_then(|v| v.parse().ok()).ok_or_else(|| perr(offset + 1, "bad order="))?;
    if lines.len() < k + 2 {
        return Err(perr(offset + lines.len(), "truncated table"));
    }
    let labels: Vec<String> = lines[1].split_whitespace().map(str::to_string).collect();
    if labels.len() != k {
        return Err(perr(offset + 2, format!("expected {k} labels, found {}", labels.len())));
    }
    let index = |tok: &str, line: usize| labels.iter().position(|l| l == tok).ok_or_else(|| perr(line, format!("unknown label {tok:?}")));
    let mut table = Vec::with_capacity(k * k);
    for r in 0..k {
        let line = offset + 3 + r;
        let toks: Vec<&str> = lines[2 + r].split_whitespace().collect();
        if toks.len() != k {
            return Err(perr(line, format!("expected {k} entries, found {}", toks.len())));
        }
        for t in toks {
            table.push(index(t, line)?);
        }
    }
    let flags = labels.iter().map(|l| label_is_neutro(l)).collect();
    let mut used = k + 2;
    let mut m = Magma::new(name, labels.clone(), flags, table)?.with_kind(kind)?;
    if let Some(z) = lines.get(k + 2).and_then(|l| l.trim().strip_prefix("zero=")) {
        m = m.with_zero(index(z, offset + k + 3)?)?;
        used += 1;
    }
    Ok((m, used))
}

pub fn from_text(text: &str) -> Result<Magma, MagmaError> {
    let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
    let (m, used) = parse_block(&lines, 0)?;
    if used != lines.len() {
        return Err(perr(used + 1, "trailing content"));
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_exact() {
        let m = Magma::from_fn("Zmul(4)", (0..4).map(|i| i.to_string()).collect(), vec![false; 4], |a, b| a * b % 4)
            .unwrap()
            .with_zero(0)
            .unwrap();
        let text = to_text(&m);
        assert_eq!(text, "magma Zmul(4) kind=monoid order=4\n0 1 2 3\n0 0 0 0\n0 1 2 3\n0 2 0 2\n0 3 2 1\nzero=0\n");
        let back = from_text(&text).unwrap();
        assert_eq!(back, m);
        assert_eq!(to_text(&back), text);
    }

    #[test]
    fn flags_follow_labels() {
        let text = "magma t kind=semigroup order=2\n0 I\n0 0\n0 I\n";
        let m = from_text(text).unwrap();
        assert!(!m.is_neutro(0) && m.is_neutro(1));
    }

    #[test]
    fn errors_carry_lines() {
        let bad = "magma t kind=group order=2\n0 1\n0 1\n1 x\n";
        assert!(matches!(from_text(bad), Err(MagmaError::Parse { line: 4, .. })));
        let wrong_kind = "magma t kind=group order=2\n0 1\n0 0\n0 1\n";
        assert!(matches!(from_text(wrong_kind), Err(MagmaError::KindViolation { .. })));
    }
}
