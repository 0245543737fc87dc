//! Built-in example morphisms.

use crate::error::{Error, Result};
use crate::word::{parse_morphism, Morphism};

pub const GALLERY: &[(&str, &str)] = &[
    ("paper12", include_str!("../../../gallery/paper12.morph")),
    ("thue-morse", include_str!("../../../gallery/thue-morse.morph")),
    ("fibonacci", include_str!("../../../gallery/fibonacci.morph")),
    ("periodic-ab", include_str!("../../../gallery/periodic-ab.morph")),
    ("ba-example", include_str!("../../../gallery/ba-example.morph")),
];

pub fn names() -> impl Iterator<Item = &'static str> {
    GALLERY.iter().map(|(n, _)| *n)
}

pub fn source(name: &str) -> Option<&'static str> {
    let name = name.strip_suffix(".morph").unwrap_or(name);
    GALLERY.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

pub fn load(name: &str) -> Result<Morphism> {
    let src = source(name).ok_or_else(|| Error::Contract(format!("no gallery entry `{name}`")))?;
    parse_morphism(src)
}

#[cfg(test)]
mod tests {
    #[test]
    fn every_entry_parses() {
        for name in super::names() {
            super::load(name).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
        assert!(super::source("paper12.morph").is_some());
        assert!(super::load("missing").is_err());
    }
}
