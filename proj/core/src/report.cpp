namespace locus {
}
