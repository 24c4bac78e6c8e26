// placeholder: filled in as the module is implemented
