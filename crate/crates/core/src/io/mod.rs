//! Text forms of triangulations and SVG drawings of triangulation pairs.

mod svg;

pub use svg::{render_svg, RenderStyle};

use crate::combinatorics::{validate_word, word_to_triangulation, Chord, Triangulation};
use crate::error::{Error, Result, WordError};

/// Reads a triangulation given either as a tree word or as a chord list
/// `a-b,c-d,...`, where `r` stands for the root vertex. The size of a chord
/// list is one more than its number of chords.
pub fn parse_triangulation(text: &str) -> Result<Triangulation> {
    let body = text.trim();
    if body.is_empty() {
        return Err(Error::Word(WordError::Empty));
    }
    if body.chars().all(|c| c == '0' || c == '1') {
        return Ok(word_to_triangulation(&validate_word(body)?));
    }
    let offset = text.len() - text.trim_start().len();
    let items = split_items(body, offset);
    let size = items.len() + 1;
    if size > crate::MAX_SIZE {
        return Err(Error::Triangulation(crate::error::TriangulationError::TooLarge(size)));
    }
    let mut chords = Vec::with_capacity(items.len());
    for (pos, item) in items {
        let (a, b) = item.split_once('-').ok_or_else(|| Error::Parse {
            position: pos,
            message: format!("expected a chord \"a-b\" or a tree word, found {item:?}"),
        })?;
        let end = |s: &str, at: usize| -> Result<usize> {
            let s = s.trim();
            if s == "r" {
                return Ok(size + 1);
            }
            s.parse::<usize>().map_err(|_| Error::Parse {
                position: at,
                message: format!("expected a vertex number or \"r\", found {s:?}"),
            })
        };
        chords.push(Chord::new(end(a, pos)?, end(b, pos + a.len() + 1)?));
    }
    Ok(Triangulation::new(size, chords)?)
}

/// Comma-separated items with their byte positions in the original text.
fn split_items(body: &str, offset: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for part in body.split(',') {
        let lead = part.len() - part.trim_start().len();
        out.push((offset + start + lead, part.trim()));
        start += part.len() + 1;
    }
    out
}

/// Chord list with the root vertex written as `r`.
pub fn format_chord_list(t: &Triangulation) -> String {
    let root = t.root_vertex();
    let v = |x: usize| if x == root { "r".to_string() } else { x.to_string() };
    t.chords().iter().map(|c| format!("{}-{}", v(c.low()), v(c.high()))).collect::<Vec<_>>().join(",")
}
