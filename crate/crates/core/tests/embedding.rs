use std::f64::consts::{PI, TAU};
use std::fs::File;
use std::io::BufReader;

use revsurf::embedding::{generate_mesh, psi3, read_obj, stl_size, write_obj, write_stl, EmbeddingMap};
use revsurf::profile::preset;
use revsurf::Error;

#[test]
fn height_is_monotone_and_one_lipschitz() {
    for name in ["sphere", "dumbbell:0.25", "dumbbell:0.3", "bump:-0.5"] {
        let map = EmbeddingMap::new(preset(name).unwrap(), 0.0).unwrap();
        let heights: Vec<f64> = (0..=200).map(|i| map.height(PI * i as f64 / 200.0).unwrap()).collect();
        for w in heights.windows(2) {
            assert!(w[1] >= w[0], "{name}");
            // the meridian is unit speed, so height can grow no faster than s
            assert!(w[1] - w[0] <= PI / 200.0 + 1e-15, "{name}");
        }
    }
}

#[test]
fn sphere_total_height_is_two() {
    let map = EmbeddingMap::new(preset("sphere").unwrap(), 0.0).unwrap();
    assert!((map.total_height() - 2.0).abs() < 1e-12);
    assert!((map.height(PI).unwrap() - 2.0).abs() < 1e-12);
}

#[test]
fn rotational_symmetry() {
    let map = EmbeddingMap::new(preset("dumbbell:0.25").unwrap(), 0.7).unwrap();
    for s in [0.3, 1.2, 2.9] {
        let base = map.point(s, 0.0).unwrap();
        for k in 1..12 {
            let t = TAU * k as f64 / 12.0;
            let p = map.point(s, t).unwrap();
            let (c, sn) = (t.cos(), t.sin());
            let rotated = [c * base[0] - sn * base[1], sn * base[0] + c * base[1], base[2]];
            for i in 0..3 {
                assert!((p[i] - rotated[i]).abs() < 1e-14);
            }
        }
    }
}

#[test]
fn chords_are_shorter_than_meridian_arcs() {
    let map = EmbeddingMap::new(preset("dumbbell:0.3").unwrap(), 0.0).unwrap();
    let pts: Vec<[f64; 3]> = (0..=64).map(|i| map.point(PI * i as f64 / 64.0, 0.4).unwrap()).collect();
    let mut length = 0.0;
    for w in pts.windows(2) {
        let d = ((w[1][0] - w[0][0]).powi(2) + (w[1][1] - w[0][1]).powi(2) + (w[1][2] - w[0][2]).powi(2)).sqrt();
        assert!(d <= PI / 64.0 + 1e-12);
        length += d;
    }
    // polygonal length converges to the meridian length L from below
    assert!(length <= PI && PI - length < 1e-3, "{length}");
}

#[test]
fn basepoint_shifts_height() {
    let p = preset("dumbbell:0.25").unwrap();
    let a = EmbeddingMap::new(p.clone(), 0.0).unwrap();
    let b = EmbeddingMap::new(p.clone(), 1.0).unwrap();
    for s in [0.0, 0.5, 2.0, PI] {
        let shift = a.height(s).unwrap() - b.height(s).unwrap();
        assert!((shift - a.height(1.0).unwrap()).abs() < 1e-12);
        assert!((psi3(&p, s, 1.0).unwrap() - b.height(s).unwrap()).abs() < 1e-11);
    }
}

#[test]
fn non_embeddable_profiles_are_refused() {
    match EmbeddingMap::new(preset("bump:0.5").unwrap(), 0.0) {
        Err(Error::NotEmbeddable { abs_slope, .. }) => assert!((abs_slope - 5.0 * 5f64.sqrt() / 9.0).abs() < 1e-6),
        other => panic!("{other:?}"),
    }
    assert!(generate_mesh(&preset("bump:0.2").unwrap(), 8, 8, 0.0).is_err());
}

#[test]
fn obj_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.obj");
    let m = generate_mesh(&preset("sphere").unwrap(), 12, 10, 0.0).unwrap();
    write_obj(&m, File::create(&path).unwrap()).unwrap();
    let (v, f) = read_obj(BufReader::new(File::open(&path).unwrap())).unwrap();
    assert_eq!(v, m.vertices);
    assert_eq!(f, m.triangles);
}

#[test]
fn stl_file_layout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.stl");
    let m = generate_mesh(&preset("dumbbell:0.25").unwrap(), 16, 12, 0.0).unwrap();
    write_stl(&m, File::create(&path).unwrap()).unwrap();
    let bytes = std::fs::read(&path).unwrap();
    assert_eq!(bytes.len(), stl_size(m.triangles.len()));
    let n = u32::from_le_bytes(bytes[80..84].try_into().unwrap()) as usize;
    assert_eq!(n, 2 * 12 * 15);
    // first triangle: normal then the north pole vertex at the origin
    let f32_at = |i: usize| f32::from_le_bytes(bytes[i..i + 4].try_into().unwrap());
    let normal = [f32_at(84), f32_at(88), f32_at(92)];
    assert!(normal[2] < 0.0, "north fan faces down and out: {normal:?}");
    assert_eq!([f32_at(96), f32_at(100), f32_at(104)], [0.0; 3]);
}

#[test]
fn meshes_enclose_positive_volume() {
    for name in ["sphere", "dumbbell:0.25"] {
        let m = generate_mesh(&preset(name).unwrap(), 64, 64, 0.0).unwrap();
        assert!(m.signed_volume() > 0.0);
    }
    let sphere = generate_mesh(&preset("sphere").unwrap(), 256, 256, 0.0).unwrap();
    assert!((sphere.signed_volume() - 4.0 * PI / 3.0).abs() < 1e-3);
}
