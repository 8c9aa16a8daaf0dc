# Module commands: groupes de commandes de la CLI
