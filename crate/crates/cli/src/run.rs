//! The plan pipeline behind the `waveplan` binary: read a map, plan a path,
//! profile the terrain, assign robots, and emit a document.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use thiserror::Error;
use waveplan_core::{
    expand, extract_path, Connectivity, Coord, GridMap, ParseError, Plan, PlanMode,
    WavefrontError,
};

use crate::document::PlanDocument;
use crate::render::{emit_field_image, render_ascii};

/// Exit code for I/O failures.
pub const EXIT_IO: i32 = 1;
/// Exit code for unusable arguments, including unresolved endpoints.
/// Matches the code clap uses for usage errors.
pub const EXIT_BAD_ARGS: i32 = 2;
/// Exit code for map text that does not parse.
pub const EXIT_PARSE: i32 = 3;
/// Exit code when the goal cannot reach the start. A `no_path` document is
/// still written to standard output.
pub const EXIT_NO_PATH: i32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    /// One robot for the whole mission.
    Single,
    /// One robot per maximal terrain run.
    Segmented,
}

impl From<ModeArg> for PlanMode {
    fn from(mode: ModeArg) -> Self {
        match mode {
            ModeArg::Single => PlanMode::Single,
            ModeArg::Segmented => PlanMode::Segmented,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    /// Machine-readable plan document.
    Json,
    /// The map text with the path overlaid as `+`.
    Ascii,
}

fn parse_coord_arg(s: &str) -> Result<Coord, String> {
    let (row, col) = s
        .split_once(',')
        .ok_or_else(|| format!("expected ROW,COL, got {s:?}"))?;
    let row = row
        .trim()
        .parse()
        .map_err(|_| format!("bad row in {s:?}"))?;
    let col = col
        .trim()
        .parse()
        .map_err(|_| format!("bad col in {s:?}"))?;
    Ok(Coord::new(row, col))
}

fn parse_connectivity_arg(s: &str) -> Result<Connectivity, String> {
    match s {
        "4" => Ok(Connectivity::Four),
        "8" => Ok(Connectivity::Eight),
        other => Err(format!("connectivity must be 4 or 8, got {other:?}")),
    }
}

/// Plan a path on a grid map and pick the robot to run it.
#[derive(Debug, Parser)]
#[command(name = "waveplan", version)]
pub struct RunConfig {
    /// Map file, one character per cell ('.' '~' '*' 'H' 'W' '#' 'A' 'B').
    #[arg(long, value_name = "PATH")]
    pub map: PathBuf,

    /// Start cell as ROW,COL (0-based); overrides the map's 'A' marker.
    #[arg(long, value_name = "R,C", value_parser = parse_coord_arg)]
    pub start: Option<Coord>,

    /// Goal cell as ROW,COL (0-based); overrides the map's 'B' marker.
    #[arg(long, value_name = "R,C", value_parser = parse_coord_arg)]
    pub goal: Option<Coord>,

    /// Neighborhood: 4 orthogonal or 8 including diagonals.
    #[arg(long, default_value = "4", value_parser = parse_connectivity_arg)]
    pub connectivity: Connectivity,

    /// Robot assignment mode.
    #[arg(long, value_enum, default_value_t = ModeArg::Single)]
    pub mode: ModeArg,

    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    pub format: FormatArg,

    /// Also write the wave value field as a binary PPM image.
    #[arg(long, value_name = "PATH.ppm")]
    pub emit_field: Option<PathBuf>,
}

/// Run failures, one line each, prefixed with a greppable category.
#[derive(Debug, Error)]
pub enum RunError {
    #[error("error[io]: {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("error[parse]: {path}: {source}")]
    Parse { path: PathBuf, source: ParseError },

    #[error("error[args]: {0}")]
    Args(String),

    #[error("error[no_path]: goal {goal} cannot reach start {start}")]
    NoPath { start: Coord, goal: Coord },
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Io { .. } => EXIT_IO,
            RunError::Parse { .. } => EXIT_PARSE,
            RunError::Args(_) => EXIT_BAD_ARGS,
            RunError::NoPath { .. } => EXIT_NO_PATH,
        }
    }
}

fn resolve_endpoint(
    map: &GridMap,
    flag: Option<Coord>,
    marker: Option<Coord>,
    name: &str,
    marker_char: char,
) -> Result<Coord, RunError> {
    let at = flag.or(marker).ok_or_else(|| {
        RunError::Args(format!(
            "{name} unresolved: map has no '{marker_char}' marker and --{name} was not given"
        ))
    })?;
    if !map.in_bounds(at) {
        return Err(RunError::Args(format!(
            "{name} {at} is outside the {}x{} map",
            map.width(),
            map.height()
        )));
    }
    if !map.is_traversable(at) {
        return Err(RunError::Args(format!("{name} {at} is an obstacle cell")));
    }
    Ok(at)
}

/// Execute the pipeline, writing the plan document or overlay to `out`.
///
/// On `NoPath` a `no_path` document is written first (json format only) and
/// the error is still returned so the caller can exit nonzero.
pub fn run(config: &RunConfig, out: &mut dyn Write) -> Result<(), RunError> {
    let text = fs::read_to_string(&config.map).map_err(|source| RunError::Io {
        path: config.map.clone(),
        source,
    })?;
    let map = GridMap::from_text(&text).map_err(|source| RunError::Parse {
        path: config.map.clone(),
        source,
    })?;

    let start = resolve_endpoint(&map, config.start, map.start(), "start", 'A')?;
    let goal = resolve_endpoint(&map, config.goal, map.goal(), "goal", 'B')?;
    let connectivity = config.connectivity;
    let mode = PlanMode::from(config.mode);

    let field = expand(&map, goal, connectivity)
        .expect("goal was validated before expansion");

    // the field exists even when no path does, so emit it before extraction
    if let Some(image_path) = &config.emit_field {
        fs::write(image_path, emit_field_image(&field)).map_err(|source| RunError::Io {
            path: image_path.clone(),
            source,
        })?;
    }

    let path = match extract_path(&field, &map, start, connectivity) {
        Ok(path) => path,
        Err(WavefrontError::StartUnreachable(_)) => {
            if config.format == FormatArg::Json {
                let doc = PlanDocument::no_path(&map, start, goal, connectivity, mode);
                write_out(out, &doc.to_json())?;
            }
            return Err(RunError::NoPath { start, goal });
        }
        Err(e) => unreachable!("start was validated before extraction: {e}"),
    };

    let plan = Plan::build(&map, path, mode).expect("planned paths never leave the map");
    let rendered = match config.format {
        FormatArg::Json => PlanDocument::from_plan(&map, &plan, connectivity).to_json(),
        FormatArg::Ascii => {
            render_ascii(&map, &plan.path).expect("planned paths never cross obstacles")
        }
    };
    write_out(out, &rendered)
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<(), RunError> {
    out.write_all(text.as_bytes()).map_err(|source| RunError::Io {
        path: PathBuf::from("<stdout>"),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(map: &std::path::Path) -> RunConfig {
        RunConfig {
            map: map.to_path_buf(),
            start: None,
            goal: None,
            connectivity: Connectivity::Four,
            mode: ModeArg::Single,
            format: FormatArg::Json,
            emit_field: None,
        }
    }

    #[test]
    fn coord_arg_parsing() {
        assert_eq!(parse_coord_arg("2,3"), Ok(Coord::new(2, 3)));
        assert_eq!(parse_coord_arg("0 , 1"), Ok(Coord::new(0, 1)));
        assert!(parse_coord_arg("2;3").is_err());
        assert!(parse_coord_arg("-1,2").is_err());
        assert!(parse_coord_arg("a,b").is_err());
    }

    #[test]
    fn connectivity_arg_parsing() {
        assert_eq!(parse_connectivity_arg("4"), Ok(Connectivity::Four));
        assert_eq!(parse_connectivity_arg("8"), Ok(Connectivity::Eight));
        assert!(parse_connectivity_arg("6").is_err());
    }

    #[test]
    fn missing_marker_is_an_args_error() {
        let dir = tempfile::tempdir().unwrap();
        let map_path = dir.path().join("m.map");
        fs::write(&map_path, "B..\n").unwrap();
        let err = run(&config(&map_path), &mut Vec::new()).unwrap_err();
        assert_eq!(err.exit_code(), EXIT_BAD_ARGS);
        assert!(err.to_string().contains("error[args]"));
        assert!(err.to_string().contains("'A'"));
    }

    #[test]
    fn endpoint_on_obstacle_is_an_args_error() {
        let dir = tempfile::tempdir().unwrap();
        let map_path = dir.path().join("m.map");
        fs::write(&map_path, "B#A\n").unwrap();
        let mut cfg = config(&map_path);
        cfg.start = Some(Coord::new(0, 1));
        let err = run(&cfg, &mut Vec::new()).unwrap_err();
        assert_eq!(err.exit_code(), EXIT_BAD_ARGS);
        assert!(err.to_string().contains("obstacle"));
    }

    #[test]
    fn unreadable_map_is_an_io_error() {
        let cfg = config(std::path::Path::new("/definitely/not/here.map"));
        let err = run(&cfg, &mut Vec::new()).unwrap_err();
        assert_eq!(err.exit_code(), EXIT_IO);
        assert!(err.to_string().starts_with("error[io]"));
    }

    #[test]
    fn bad_map_text_is_a_parse_error() {
        let dir = tempfile::tempdir().unwrap();
        let map_path = dir.path().join("m.map");
        fs::write(&map_path, "BA\n#\n").unwrap();
        let err = run(&config(&map_path), &mut Vec::new()).unwrap_err();
        assert_eq!(err.exit_code(), EXIT_PARSE);
        assert!(err.to_string().starts_with("error[parse]"));
    }

    #[test]
    fn no_path_still_writes_a_document() {
        let dir = tempfile::tempdir().unwrap();
        let map_path = dir.path().join("m.map");
        fs::write(&map_path, "B#A\n").unwrap();
        let mut out = Vec::new();
        let err = run(&config(&map_path), &mut out).unwrap_err();
        assert_eq!(err.exit_code(), EXIT_NO_PATH);
        let doc: serde_json::Value = serde_json::from_slice(&out).unwrap();
        assert_eq!(doc["status"], "no_path");
    }
}
