//! Human- and image-facing views of maps, paths, and value fields.

use thiserror::Error;
use waveplan_core::wavefront::{GOAL, OBSTACLE};
use waveplan_core::{Coord, GridMap, Path, ValueField};

/// Gray level of the goal cell in field images.
const GOAL_GRAY: u32 = 64;
/// Gray level of the farthest reached cell.
const MAX_GRAY: u32 = 224;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error("path cell {0} is an obstacle")]
    PathCellIsObstacle(Coord),

    #[error("path cell {0} is outside the map")]
    PathCellOutOfBounds(Coord),
}

/// Overlay `path` onto the map text, marking path cells with `+`.
///
/// Start and goal marker cells keep their `A`/`B` letters. The output has
/// the same dimensions as the map text.
pub fn render_ascii(map: &GridMap, path: &Path) -> Result<String, RenderError> {
    let mut rows: Vec<Vec<u8>> = map
        .to_text()
        .lines()
        .map(|line| line.as_bytes().to_vec())
        .collect();
    for &at in path {
        if !map.in_bounds(at) {
            return Err(RenderError::PathCellOutOfBounds(at));
        }
        if !map.is_traversable(at) {
            return Err(RenderError::PathCellIsObstacle(at));
        }
        if map.start() == Some(at) || map.goal() == Some(at) {
            continue;
        }
        rows[at.row][at.col] = b'+';
    }
    let mut out = String::with_capacity((map.width() + 1) * map.height());
    for row in rows {
        out.push_str(std::str::from_utf8(&row).expect("map text is ASCII"));
        out.push('\n');
    }
    Ok(out)
}

/// Encode a value field as a binary PPM (P6) image, one pixel per cell.
///
/// Obstacles are black, unreached cells white, and reached cells ramp from
/// dark gray at the goal to light gray at the farthest cell.
pub fn emit_field_image(field: &ValueField) -> Vec<u8> {
    let span = field.max_value().saturating_sub(GOAL);
    let ramp = |value: u32| match ((value - GOAL) * (MAX_GRAY - GOAL_GRAY)).checked_div(span) {
        Some(step) => (GOAL_GRAY + step) as u8,
        None => GOAL_GRAY as u8,
    };
    let mut out = format!("P6\n{} {}\n255\n", field.width(), field.height()).into_bytes();
    for &value in field.values() {
        let gray: u8 = if value == OBSTACLE {
            0
        } else if value < GOAL {
            255
        } else {
            ramp(value)
        };
        out.extend_from_slice(&[gray, gray, gray]);
    }
    out
}
