# Module schemas: formes JSON des entrées et des rapports
