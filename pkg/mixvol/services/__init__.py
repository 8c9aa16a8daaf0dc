# Module services: noyau numérique (matrices, corps convexes, volumes mixtes)
