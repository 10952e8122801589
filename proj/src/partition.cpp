namespace bernproc {}
