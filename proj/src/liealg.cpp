namespace superq {}
