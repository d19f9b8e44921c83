fn main() {
    std::process::exit(mitosis_kit::cli::run(std::env::args_os()));
}
