use std::collections::HashMap;

use super::{prolongability_failure, Letter, Morphism};
use crate::error::{Error, Result};

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn is_name(tok: &str) -> bool {
    !tok.is_empty() && !tok.contains(['#', '=', ':']) && tok != "->"
}

/// Parses a morphism document.
///
/// ```text
/// letters: a b
/// start: a
/// map a -> a b
/// map b -> a
/// degree b = 2
/// degree default = 1
/// ```
///
/// Letter order is declaration order. Without `degree` lines every letter has
/// degree 1. The start letter must be prolongable.
pub fn parse_morphism(source: &str) -> Result<Morphism> {
    let mut names: Option<Vec<String>> = None;
    let mut lookup: HashMap<String, Letter> = HashMap::new();
    let mut images: Vec<Option<crate::word::Word>> = Vec::new();
    let mut start: Option<(usize, Letter)> = None;
    let mut degrees: Vec<Option<u64>> = Vec::new();
    let mut default_degree: Option<u64> = None;

    for (i, raw) in source.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("letters:") {
            if names.is_some() {
                return Err(err(lineno, "`letters:` declared twice"));
            }
            let list: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
            if list.is_empty() {
                return Err(err(lineno, "empty alphabet"));
            }
            for (k, name) in list.iter().enumerate() {
                if !is_name(name) || name == "default" {
                    return Err(err(lineno, format!("invalid letter name `{name}`")));
                }
                if lookup.insert(name.clone(), Letter(k as u16)).is_some() {
                    return Err(err(lineno, format!("duplicate letter `{name}`")));
                }
            }
            if list.len() > u16::MAX as usize {
                return Err(err(lineno, "alphabet too large"));
            }
            images = vec![None; list.len()];
            degrees = vec![None; list.len()];
            names = Some(list);
            continue;
        }
        if names.is_none() {
            return Err(err(lineno, "first line must be `letters: ...`"));
        }
        let letter = |tok: &str| {
            lookup
                .get(tok)
                .copied()
                .ok_or_else(|| err(lineno, format!("undeclared letter `{tok}`")))
        };
        if let Some(rest) = line.strip_prefix("start:") {
            if start.is_some() {
                return Err(err(lineno, "`start:` declared twice"));
            }
            let toks: Vec<&str> = rest.split_whitespace().collect();
            let [tok] = toks[..] else {
                return Err(err(lineno, "`start:` takes exactly one letter"));
            };
            start = Some((lineno, letter(tok)?));
        } else if let Some(rest) = line.strip_prefix("map ") {
            let (lhs, rhs) = rest
                .split_once("->")
                .ok_or_else(|| err(lineno, "expected `map <letter> -> <letters>`"))?;
            let lhs = lhs.trim();
            let a = letter(lhs)?;
            if images[a.index()].is_some() {
                return Err(err(lineno, format!("letter `{lhs}` mapped twice")));
            }
            let img = rhs.split_whitespace().map(letter).collect::<Result<Vec<_>>>()?;
            images[a.index()] = Some(img);
        } else if let Some(rest) = line.strip_prefix("degree ") {
            let (lhs, rhs) = rest
                .split_once('=')
                .ok_or_else(|| err(lineno, "expected `degree <letter> = <positive integer>`"))?;
            let rhs = rhs.trim();
            let value: i128 = rhs
                .parse()
                .map_err(|_| err(lineno, format!("degree `{rhs}` is not an integer")))?;
            if value <= 0 {
                return Err(err(lineno, format!("degree must be positive, got {value}")));
            }
            let value = u64::try_from(value).map_err(|_| err(lineno, "degree too large"))?;
            let lhs = lhs.trim();
            if lhs == "default" {
                if default_degree.replace(value).is_some() {
                    return Err(err(lineno, "`degree default` declared twice"));
                }
            } else {
                let a = letter(lhs)?;
                if degrees[a.index()].replace(value).is_some() {
                    return Err(err(lineno, format!("degree of `{lhs}` declared twice")));
                }
            }
        } else {
            return Err(err(lineno, format!("unrecognized line `{line}`")));
        }
    }

    let names = names.ok_or_else(|| err(0, "missing `letters:` line"))?;
    let (start_line, start) = start.ok_or_else(|| err(0, "missing `start:` line"))?;
    let images = images
        .into_iter()
        .enumerate()
        .map(|(k, img)| img.ok_or_else(|| err(0, format!("letter `{}` has no `map` line", names[k]))))
        .collect::<Result<Vec<_>>>()?;
    let fallback = default_degree.unwrap_or(1);
    let grading = degrees.into_iter().map(|d| d.unwrap_or(fallback)).collect();

    let m = Morphism::new(names, images, start, Some(grading))
        .map_err(|e| err(0, e.to_string()))?;
    if let Some(reason) = prolongability_failure(&m, start) {
        return Err(err(
            start_line,
            format!("start letter `{}` is not prolongable: {reason}", m.name(start)),
        ));
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line_of(e: Error) -> usize {
        match e {
            Error::Parse { line, .. } => line,
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn parses_fibonacci() {
        let m = parse_morphism(crate::gallery::source("fibonacci").unwrap()).unwrap();
        assert_eq!(m.alphabet_len(), 2);
        assert_eq!(m.name(m.start()), "a");
        assert_eq!(m.grading(), Some(&[1, 1][..]));
        assert_eq!(m.render(m.image(Letter(0))), "a b");
    }

    #[test]
    fn parses_paper12_grading() {
        let m = parse_morphism(crate::gallery::source("paper12").unwrap()).unwrap();
        assert_eq!(m.alphabet_len(), 12);
        let g = m.grading().unwrap();
        assert_eq!(g[0], 1);
        assert!(g[1..].iter().all(|&d| d == 2));
        assert!(m.images().iter().all(|img| img.len() == 4));
    }

    #[test]
    fn identity_start_is_not_prolongable() {
        let e = parse_morphism("letters: a\nstart: a\nmap a -> a\n").unwrap_err();
        assert_eq!(line_of(e.clone()), 2);
        assert!(e.to_string().contains("tail x is empty"), "{e}");
    }

    #[test]
    fn error_paths() {
        let cases = [
            ("letters: a\nstart: a\nmap a -> a c\n", 3, "undeclared"),
            ("letters: a b\nmap a -> a b\nmap b -> b\n", 0, "missing `start:`"),
            ("letters: a a\n", 1, "duplicate"),
            ("letters: a b\nstart: a\nmap a -> a b\nmap b -> b\ndegree b = 0\n", 5, "positive"),
            ("letters: a b\nstart: a\nmap a -> a b\nmap b -> b\ndegree b = -3\n", 5, "positive"),
            ("start: a\nletters: a\n", 1, "first line"),
            ("letters: a b\nstart: a\nmap a -> a b\n", 0, "no `map`"),
            ("letters: a b\nstart: a\nmap a -> a b\nmap a -> a\nmap b -> b", 4, "twice"),
            ("letters: a b\nstart: b\nmap a -> a b\nmap b -> a\n", 2, "does not begin"),
        ];
        for (src, line, needle) in cases {
            let e = parse_morphism(src).unwrap_err();
            assert!(e.to_string().contains(needle), "{src:?}: {e}");
            assert_eq!(line_of(e), line, "{src:?}");
        }
    }

    #[test]
    fn comments_and_empty_images() {
        let src = "# header\nletters: a b c # trailing\n\nstart: a\nmap a -> a b c\nmap b ->\nmap c -> c\n";
        let m = parse_morphism(src).unwrap();
        assert!(m.image(Letter(1)).is_empty());
    }

    #[test]
    fn default_degree_applies_to_undeclared_letters() {
        let src = "letters: a b c\nstart: a\nmap a -> a b\nmap b -> c\nmap c -> a\ndegree a = 5\ndegree default = 3\n";
        assert_eq!(parse_morphism(src).unwrap().grading(), Some(&[5, 3, 3][..]));
    }
}
