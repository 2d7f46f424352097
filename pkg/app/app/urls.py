"""
URL configuration: admin, API schema and docs, square checks and stored
runs.
"""

from drf_spectacular.views import (
    SpectacularAPIView,
    SpectacularSwaggerView
)

from django.contrib import admin
from django.urls import path, include

urlpatterns = [
    path('admin/', admin.site.urls),
    # Generating schema file
    path('api/schema/', SpectacularAPIView.as_view(), name='api-schema'),
    # Serving swagger documentation with the generated schema file
    path(
        'api/docs/',
        SpectacularSwaggerView.as_view(url_name='api-schema'),
        name='api-docs'
        ),
    path('api/latin/', include('latin.urls')),
    path('api/', include('runs.urls')),
]
