//! Grid-map path planning with terrain-based robot selection.
//!
//! The toolkit plans shortest paths on rectangular terrain grids and picks
//! which of five heterogeneous robots should execute the mission:
//!
//! - [`gridmap`] owns the map model and the one-character-per-cell text
//!   format, including start (`A`) and goal (`B`) markers.
//! - [`wavefront`] floods wave values outward from the goal and extracts a
//!   shortest path by descending them.
//! - [`selection`] reads the terrain under a path and assigns a robot, either
//!   one for the whole mission or one per terrain run.
//!
//! ```
//! use waveplan_core::{Connectivity, GridMap, Plan, PlanMode};
//!
//! let map = GridMap::from_text("B.~A").unwrap();
//! let path = waveplan_core::plan_path(
//!     &map,
//!     map.start().unwrap(),
//!     map.goal().unwrap(),
//!     Connectivity::Four,
//! )
//! .unwrap();
//! let plan = Plan::build(&map, path, PlanMode::Single).unwrap();
//! assert_eq!(plan.length(), 3);
//! ```

pub mod gridmap;
pub mod selection;
pub mod wavefront;

pub use gridmap::{Cell, Connectivity, Coord, GridMap, OutOfBounds, ParseError, TerrainClass};
pub use selection::{
    segment_plan, select_robot, terrain_profile, Plan, PlanMode, PlanSegment, Robot,
    RobotAssignment, SelectionError, TerrainProfile,
};
pub use wavefront::{
    bfs_distance, expand, extract_path, plan_path, Path, ValueField, WavefrontError,
};
