// Triangulate an embeddable dumbbell and write it as OBJ and binary STL.
//
// `cargo run --example export_mesh -- out_dir` (defaults to the system
// temp directory).

use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;

use revsurf::embedding::{generate_mesh, write_obj, write_stl};
use revsurf::profile::preset;

pub fn run() -> revsurf::Result<()> {
    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(std::env::temp_dir);
    let mesh = generate_mesh(&preset("dumbbell:0.25")?, 96, 48, 0.0)?;
    println!(
        "{} vertices, {} triangles, watertight: {}, chi = {}",
        mesh.vertices.len(),
        mesh.triangles.len(),
        mesh.is_watertight(),
        mesh.euler_characteristic()
    );
    println!("enclosed volume {:.6}", mesh.signed_volume());

    let obj = dir.join("revsurf_dumbbell.obj");
    write_obj(&mesh, BufWriter::new(File::create(&obj)?))?;
    let stl = dir.join("revsurf_dumbbell.stl");
    write_stl(&mesh, BufWriter::new(File::create(&stl)?))?;
    println!("wrote {} and {}", obj.display(), stl.display());
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
