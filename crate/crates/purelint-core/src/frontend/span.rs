//! Source positions for tokens, syntax nodes, and diagnostics.

use std::fmt;
use std::sync::Arc;

/// A half-open region of a source file, measured in 1-based lines and
/// 1-based character columns. `(line, col)` is the first character of the
/// region; `(end_line, end_col)` is one past the last. A span with
/// `col == end_col` on the same line is empty (used by synthesized tokens).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SourceSpan {
    pub file: Arc<str>,
    pub line: u32,
    pub col: u32,
    pub end_line: u32,
    pub end_col: u32,
}

impl SourceSpan {
    pub fn new(file: Arc<str>, line: u32, col: u32, end_line: u32, end_col: u32) -> Self {
        debug_assert!((line, col) <= (end_line, end_col), "inverted span");
        SourceSpan { file, line, col, end_line, end_col }
    }

    /// An empty span at a single position.
    pub fn point(file: Arc<str>, line: u32, col: u32) -> Self {
        Self::new(file, line, col, line, col)
    }

    /// The smallest span covering both `self` and `other`.
    pub fn merge(&self, other: &SourceSpan) -> SourceSpan {
        let (line, col) = (self.line, self.col).min((other.line, other.col));
        let (end_line, end_col) = (self.end_line, self.end_col).max((other.end_line, other.end_col));
        SourceSpan { file: self.file.clone(), line, col, end_line, end_col }
    }

    pub fn is_empty(&self) -> bool {
        (self.line, self.col) == (self.end_line, self.end_col)
    }
}

impl fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.file, self.line, self.col)
    }
}

/// Extract the text a span covers. Columns are counted in characters, so
/// this walks the relevant lines rather than indexing bytes.
pub fn slice_span<'a>(source: &'a str, span: &SourceSpan) -> &'a str {
    let start = offset_of(source, span.line, span.col);
    let end = offset_of(source, span.end_line, span.end_col);
    &source[start..end.max(start)]
}

/// Byte offset of a 1-based (line, col) character position. Positions past
/// the end of a line or file clamp to the nearest valid offset.
fn offset_of(source: &str, line: u32, col: u32) -> usize {
    let mut cur_line = 1u32;
    let mut line_start = 0usize;
    if line > 1 {
        for (i, ch) in source.char_indices() {
            if ch == '\n' {
                cur_line += 1;
                line_start = i + 1;
                if cur_line == line {
                    break;
                }
            }
        }
        if cur_line < line {
            return source.len();
        }
    }
    let rest = &source[line_start..];
    let mut chars_seen = 1u32;
    for (i, ch) in rest.char_indices() {
        if chars_seen == col || ch == '\n' {
            return line_start + i;
        }
        chars_seen += 1;
    }
    source.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn file() -> Arc<str> {
        Arc::from("test.py")
    }

    #[test]
    fn merge_widens_in_both_directions() {
        let a = SourceSpan::new(file(), 2, 5, 2, 8);
        let b = SourceSpan::new(file(), 1, 3, 1, 9);
        let m = a.merge(&b);
        assert_eq!((m.line, m.col, m.end_line, m.end_col), (1, 3, 2, 8));
    }

    #[test]
    fn slice_single_line() {
        let src = "x = 1\ny = 22\n";
        let span = SourceSpan::new(file(), 2, 5, 2, 7);
        assert_eq!(slice_span(src, &span), "22");
    }

    #[test]
    fn slice_multi_line() {
        let src = "ab\ncd\nef\n";
        let span = SourceSpan::new(file(), 1, 2, 3, 2);
        assert_eq!(slice_span(src, &span), "b\ncd\ne");
    }

    #[test]
    fn slice_empty_span() {
        let src = "abc\n";
        let span = SourceSpan::point(file(), 1, 2);
        assert_eq!(slice_span(src, &span), "");
    }

    #[test]
    fn slice_handles_multibyte_chars() {
        let src = "s = \"héllo\"\n";
        let span = SourceSpan::new(file(), 1, 5, 1, 12);
        assert_eq!(slice_span(src, &span), "\"héllo\"");
    }
}
