fn main() {
    std::process::exit(mzv_motive::cli::run(std::env::args_os()));
}
