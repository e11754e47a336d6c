//! Tokens produced by the teaching-subset lexer.

use super::span::SourceSpan;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TokenKind {
    /// Identifier that is not a keyword.
    Name,
    /// Decimal integer or float literal.
    Number,
    /// String literal; the lexeme holds the cooked value without quotes.
    String,
    Keyword,
    /// Operator or delimiter; the lexeme holds its exact text.
    Op,
    Newline,
    Indent,
    Dedent,
    Eof,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Token {
    pub kind: TokenKind,
    pub lexeme: String,
    pub span: SourceSpan,
}

impl Token {
    pub fn is_op(&self, text: &str) -> bool {
        self.kind == TokenKind::Op && self.lexeme == text
    }

    pub fn is_keyword(&self, word: &str) -> bool {
        self.kind == TokenKind::Keyword && self.lexeme == word
    }
}

/// The Python keyword set. All of these lex as `TokenKind::Keyword`; the
/// parser decides which ones the teaching grammar actually supports.
pub const KEYWORDS: &[&str] = &[
    "False", "None", "True", "and", "as", "assert", "async", "await", "break", "class",
    "continue", "def", "del", "elif", "else", "except", "finally", "for", "from", "global",
    "if", "import", "in", "is", "lambda", "nonlocal", "not", "or", "pass", "raise", "return",
    "try", "while", "with", "yield",
];

pub fn is_keyword(word: &str) -> bool {
    KEYWORDS.contains(&word)
}
