fn main() {
    std::process::exit(fp5::cli::main());
}
