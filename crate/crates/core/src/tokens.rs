use serde::Serialize;

/// Ordered tokens produced from one article body.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct TokenStream(Vec<String>);

impl TokenStream {
    pub fn new(tokens: Vec<String>) -> Self {
        TokenStream(tokens)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(String::as_str)
    }

    pub fn as_slice(&self) -> &[String] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<String> {
        self.0
    }

    /// Appends `other` after the tokens of `self`.
    pub fn concat(mut self, other: TokenStream) -> TokenStream {
        self.0.extend(other.0);
        self
    }
}

impl From<Vec<String>> for TokenStream {
    fn from(tokens: Vec<String>) -> Self {
        TokenStream(tokens)
    }
}

impl<'a> From<Vec<&'a str>> for TokenStream {
    fn from(tokens: Vec<&'a str>) -> Self {
        TokenStream(tokens.into_iter().map(str::to_owned).collect())
    }
}

impl FromIterator<String> for TokenStream {
    fn from_iter<I: IntoIterator<Item = String>>(iter: I) -> Self {
        TokenStream(iter.into_iter().collect())
    }
}

impl IntoIterator for TokenStream {
    type Item = String;
    type IntoIter = std::vec::IntoIter<String>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}
