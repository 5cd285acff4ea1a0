//! Small helpers shared by the literal parsers.

/// Splits on `sep` at bracket depth zero, so `{a,b},{c}` or `(0,1),(1,0)`
/// split into their top-level items. Empty input yields no items.
pub(crate) fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '{' | '(' | '[' => depth += 1,
            '}' | ')' | ']' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(&s[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    let last = &s[start..];
    if !(out.is_empty() && last.trim().is_empty()) {
        out.push(last);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::split_top_level;

    #[test]
    fn nested_split() {
        assert_eq!(split_top_level("{a,b},{c}", ','), vec!["{a,b}", "{c}"]);
        assert_eq!(split_top_level("(0,1),(1,0)", ','), vec!["(0,1)", "(1,0)"]);
        assert!(split_top_level("  ", ',').is_empty());
        assert_eq!(split_top_level("2Z|{0,1}", '|'), vec!["2Z", "{0,1}"]);
    }
}
