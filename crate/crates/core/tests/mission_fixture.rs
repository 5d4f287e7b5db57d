//! End-to-end checks on the bundled all-terrain sample map.

use std::collections::BTreeSet;
use std::fs;

use waveplan_core::{
    plan_path, segment_plan, select_robot, terrain_profile, Connectivity, GridMap, Robot,
    TerrainClass,
};

fn fixture() -> GridMap {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../maps/all_terrain.map");
    let text = fs::read_to_string(path).expect("fixture map is bundled with the repo");
    GridMap::from_text(&text).unwrap()
}

#[test]
fn fixture_path_crosses_every_terrain() {
    let map = fixture();
    let path = plan_path(
        &map,
        map.start().unwrap(),
        map.goal().unwrap(),
        Connectivity::Four,
    )
    .unwrap();
    assert_eq!(path.edge_count(), 16);

    let profile = terrain_profile(&map, &path).unwrap();
    assert_eq!(profile.present, BTreeSet::from(TerrainClass::ALL));
}

#[test]
fn fixture_mission_goes_to_the_lizard() {
    let map = fixture();
    let path = plan_path(
        &map,
        map.start().unwrap(),
        map.goal().unwrap(),
        Connectivity::Four,
    )
    .unwrap();
    let profile = terrain_profile(&map, &path).unwrap();
    assert!(profile.present.contains(&TerrainClass::Wall));
    assert_eq!(
        select_robot(&profile.present).unwrap(),
        Robot::RoboticLizard
    );
}

#[test]
fn fixture_segments_cover_the_corridor() {
    let map = fixture();
    let path = plan_path(
        &map,
        map.start().unwrap(),
        map.goal().unwrap(),
        Connectivity::Four,
    )
    .unwrap();
    let segments = segment_plan(&map, &path).unwrap();
    let robots: Vec<Robot> = segments.iter().map(|s| s.robot).collect();
    assert_eq!(
        robots,
        vec![
            Robot::HalfHumanoid,
            Robot::Quadruped,
            Robot::RoboticSnake,
            Robot::HalfHumanoid,
            Robot::RoboticLizard,
            Robot::Biped,
            Robot::HalfHumanoid,
        ]
    );

    let mut rebuilt = Vec::new();
    for (i, seg) in segments.iter().enumerate() {
        let from = if i == 0 { 0 } else { 1 };
        rebuilt.extend_from_slice(&seg.path.coords()[from..]);
    }
    assert_eq!(rebuilt, path.coords());
}
