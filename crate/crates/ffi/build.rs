fn main() {
    let dir = std::env::var("CARGO_MANIFEST_DIR").expect("CARGO_MANIFEST_DIR");
    let config = cbindgen::Config::from_file(format!("{dir}/cbindgen.toml")).unwrap_or_default();
    println!("cargo:rerun-if-changed=src/lib.rs");
    println!("cargo:rerun-if-changed=cbindgen.toml");
    match cbindgen::Builder::new().with_config(config).with_crate(&dir).generate() {
        Ok(b) => {
            b.write_to_file(format!("{dir}/include/cppt.h"));
        }
        // keep the checked-in header rather than failing the build
        Err(e) => println!("cargo:warning=cbindgen: {e}"),
    }
}
